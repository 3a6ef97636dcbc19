"""surfcat: a workbench for triangulated marked surfaces and their gentle algebras."""

__version__ = "0.1.0"

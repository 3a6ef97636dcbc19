"""Local HTTP service driving the interactive explorer.

One session per process: a base triangulation plus the flip history.  The
server is single-threaded, so state changes are trivially serialized;
replaying the history against the base always reproduces the current state.
"""
from __future__ import annotations

import json
import os
from http.server import BaseHTTPRequestHandler, HTTPServer
from urllib.parse import parse_qs, urlparse

from . import homext as hx
from . import objects as ob
from . import qp
from . import surface as sf
from .errors import BoundaryArcFlip, SurfcatError, UnknownArc


class Session:
    def __init__(self, base: sf.Triangulation):
        self.base = base
        self.current = base
        self.history: list[int] = []

    def flip(self, arc: int) -> None:
        self.current, _ = self.current.flip(arc)
        self.history.append(arc)

    def undo(self) -> None:
        if not self.history:
            return
        self.history.pop()
        self.current = self.base
        for a in self.history:
            self.current, _ = self.current.flip(a)

    def reset(self) -> None:
        self.current = self.base
        self.history = []

    def state_doc(self) -> dict:
        inv = self.current.invariants()
        return {
            "triangulation": sf.to_json_dict(self.current),
            "history": list(self.history),
            "invariants": {
                "genus": inv.genus,
                "boundary_components": inv.boundary_components,
                "marked_counts": list(inv.marked_counts),
            },
            "marked_points": self._marked_doc(),
        }

    def _marked_doc(self) -> list[dict]:
        T = self.current
        out = []
        for m in range(len(T.marked_classes)):
            cyc = T.cycle_of_class[m]
            out.append({
                "name": T.marked_name(m),
                "boundary": cyc,
                "cw_next": T.marked_name(T.cw_next(m)),
            })
        return out

    def quiver_doc(self) -> dict:
        q, w, _ = qp.qp_from_triangulation(self.current)
        return {
            "vertices": list(q.vertices),
            "arrows": [{"id": a.id, "source": a.source, "target": a.target}
                       for a in q.arrows],
            "potential_cycles": [list(c) for c in w.cycles],
        }


class _Handler(BaseHTTPRequestHandler):
    session: Session = None   # installed by serve()

    # quiet the default stderr chatter
    def log_message(self, fmt, *args):
        pass

    def _reply(self, code: int, doc: dict) -> None:
        body = json.dumps(doc, separators=(",", ":")).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if length == 0:
            return {}
        try:
            return json.loads(self.rfile.read(length))
        except json.JSONDecodeError:
            raise ValueError("request body is not JSON")

    def do_OPTIONS(self):
        self._reply(204, {})

    def do_GET(self):
        url = urlparse(self.path)
        qs = parse_qs(url.query)
        ses = self.session
        try:
            if url.path == "/api/state":
                return self._reply(200, ses.state_doc())
            if url.path == "/api/quiver":
                return self._reply(200, ses.quiver_doc())
            if url.path == "/api/object/ar":
                spec = (qs.get("spec") or [""])[0]
                if not spec:
                    return self._reply(400, {"error": "BadRequest",
                                             "detail": "missing spec"})
                T = ses.current
                alg = qp.algebra_of(T)
                x = ob.parse_object(T, alg, spec)
                tri = ob.ar_triangle(T, alg, x)
                return self._reply(200, {
                    "source": ob.format_object(T, tri.source),
                    "middle": [ob.format_object(T, m) for m in tri.middle],
                    "target": ob.format_object(T, tri.target),
                })
            if url.path == "/api/hom":
                T = ses.current
                alg = qp.algebra_of(T)
                x = ob.parse_object(T, alg, (qs.get("from") or [""])[0])
                y = ob.parse_object(T, alg, (qs.get("to") or [""])[0])
                return self._reply(200, {"dim": hx.hom_c_dim(T, alg, x, y)})
            return self._reply(404, {"error": "NotFound", "detail": url.path})
        except UnknownArc as exc:
            return self._reply(404, {"error": exc.code, "detail": exc.detail})
        except SurfcatError as exc:
            return self._reply(400, {"error": exc.code, "detail": exc.detail})
        except ValueError as exc:
            return self._reply(400, {"error": "BadRequest", "detail": str(exc)})

    def do_POST(self):
        url = urlparse(self.path)
        ses = self.session
        try:
            if url.path == "/api/flip":
                body = self._body()
                arc = body.get("arc")
                if not isinstance(arc, int):
                    return self._reply(400, {"error": "BadRequest",
                                             "detail": "arc must be an integer"})
                ses.flip(arc)
                return self._reply(200, ses.state_doc())
            if url.path == "/api/undo":
                ses.undo()
                return self._reply(200, ses.state_doc())
            if url.path == "/api/reset":
                ses.reset()
                return self._reply(200, ses.state_doc())
            return self._reply(404, {"error": "NotFound", "detail": url.path})
        except BoundaryArcFlip as exc:
            return self._reply(409, {"error": exc.code, "detail": exc.detail})
        except UnknownArc as exc:
            return self._reply(404, {"error": exc.code, "detail": exc.detail})
        except SurfcatError as exc:
            return self._reply(400, {"error": exc.code, "detail": exc.detail})
        except ValueError as exc:
            return self._reply(400, {"error": "BadRequest", "detail": str(exc)})


def make_server(T: sf.Triangulation, port: int | None = None) -> HTTPServer:
    if port is None:
        port = int(os.environ.get("SURFCAT_PORT", "8765"))
    handler = type("SessionHandler", (_Handler,), {"session": Session(T)})
    return HTTPServer(("127.0.0.1", port), handler)


def serve(T: sf.Triangulation, port: int | None = None) -> None:
    server = make_server(T, port)
    host, bound = server.server_address[:2]
    print(f"surfcat service on http://{host}:{bound}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass

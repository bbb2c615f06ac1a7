"""Read-only HTTP server feeding the viewer.

Serves the vrmesh document under /api/model, its provenance under
/api/report, and viewer assets from a static directory.  The document is
held immutably in memory; handlers never write anything, so the threading
server needs no locking.
"""

from __future__ import annotations

import json
import logging
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

logger = logging.getLogger(__name__)

_FALLBACK_PAGE = b"""<!doctype html>
<html><head><meta charset="utf-8"><title>fea2vr</title></head>
<body>
<h1>fea2vr server</h1>
<p>The model is available at <a href="/api/model">/api/model</a> and its
conversion report at <a href="/api/report">/api/report</a>.</p>
<p>No viewer assets were found. Build the viewer (see frontend/README.md)
and pass its dist directory via <code>--assets</code>.</p>
</body></html>
"""


class VrMeshRequestHandler(BaseHTTPRequestHandler):
    # Supplied by make_server via the server instance.
    def _send(self, status: int, content_type: str, body: bytes):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Cache-Control", "no-store")
        self.end_headers()
        self.wfile.write(body)

    def do_GET(self):  # noqa: N802 (http.server API)
        path = self.path.split("?", 1)[0]
        if path == "/health":
            self._send(200, "text/plain; charset=utf-8", b"ok")
        elif path == "/api/model":
            self._send(200, "application/json", self.server.model_bytes)
        elif path == "/api/report":
            self._send(200, "application/json", self.server.report_bytes)
        else:
            self._send_static(path)

    def _send_static(self, path: str):
        if path == "/":
            path = "/index.html"
        assets = self.server.assets_dir
        if assets is None:
            if path == "/index.html":
                self._send(200, "text/html; charset=utf-8", _FALLBACK_PAGE)
            else:
                self._send(404, "text/plain; charset=utf-8", b"not found")
            return
        target = (assets / path.lstrip("/")).resolve()
        if not str(target).startswith(str(assets.resolve())) or not target.is_file():
            self._send(404, "text/plain; charset=utf-8", b"not found")
            return
        content_type = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        self._send(200, content_type, target.read_bytes())

    def log_message(self, format, *args):
        logger.debug("%s - %s", self.address_string(), format % args)


def make_server(
    model_bytes: bytes,
    provenance: dict | None,
    assets_dir: Path | None,
    host: str = "127.0.0.1",
    port: int = 8377,
) -> ThreadingHTTPServer:
    """Build the server; raises OSError when the port is unavailable."""
    server = ThreadingHTTPServer((host, port), VrMeshRequestHandler)
    server.model_bytes = model_bytes
    server.report_bytes = json.dumps(provenance or {}, separators=(",", ":")).encode("utf-8")
    server.assets_dir = assets_dir
    return server

"""Stateless HTTP/JSON service.

Thin routing over the payload builders in :mod:`ebwtlab.api`.  Responses
carry permissive cross-origin headers so a browser explorer served from
anywhere can call the endpoints.  A request body may carry an "id"
field; the response is then wrapped as {id, ms, result | error},
otherwise the bare payload (or bare {code, message} error) is returned.

Searches poll the client socket between compositions and abandon the
work when the peer has disconnected.
"""

from __future__ import annotations

import json
import logging
import select
import socket
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Callable
from urllib.parse import parse_qs, urlsplit

from . import api
from .api import ApiError, DEFAULT_LIMITS, Limits, MalformedInput, canonical_json
from .decompositions import SearchCancelled

__all__ = ["create_server", "serve", "make_client_gone_checker"]

log = logging.getLogger("ebwtlab.server")

MAX_BODY_BYTES = 1 << 20


def make_client_gone_checker(
    connection: socket.socket, every: int = 1024
) -> Callable[[], bool]:
    """A poll function that turns true once the peer has disconnected.

    While a request is being computed nothing legitimate arrives on the
    connection, so a readable socket whose peek returns no data means
    the client closed it.  The actual syscall runs once per ``every``
    calls to keep the check cheap inside tight search loops.
    """
    calls = 0
    gone = False

    def check() -> bool:
        nonlocal calls, gone
        if gone:
            return True
        calls += 1
        if calls % every:
            return False
        try:
            readable, _, _ = select.select([connection], [], [], 0)
            if readable and connection.recv(1, socket.MSG_PEEK) == b"":
                gone = True
        except OSError:
            gone = True
        return gone

    return check


class ApiHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    # ------------------------------------------------------------ plumbing

    def log_message(self, format: str, *args) -> None:
        log.debug("%s %s", self.address_string(), format % args)

    def _send(self, status: int, payload: dict) -> None:
        body = canonical_json(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self._cors()
        self.end_headers()
        self.wfile.write(body)

    def _cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if length > MAX_BODY_BYTES:
            raise MalformedInput(f"request body over {MAX_BODY_BYTES} bytes")
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise MalformedInput("expected a JSON object body")
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"body is not valid JSON: {exc}") from exc
        if not isinstance(body, dict):
            raise MalformedInput("body must be a JSON object")
        return body

    def _respond(self, request_id, started: float, payload: dict | None, error: ApiError | None) -> None:
        ms = (time.perf_counter() - started) * 1000.0
        if error is not None:
            inner = {"code": error.code, "message": error.message}
            if request_id is None:
                self._send(error.status, inner)
            else:
                self._send(error.status, {"id": request_id, "ms": ms, "error": inner})
        elif request_id is None:
            self._send(200, payload or {})
        else:
            self._send(200, {"id": request_id, "ms": ms, "result": payload or {}})

    # -------------------------------------------------------------- verbs

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self._cors()
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        started = time.perf_counter()
        url = urlsplit(self.path)
        params = {k: v[0] for k, v in parse_qs(url.query).items()}
        limits: Limits = self.server.limits
        try:
            if url.path == "/api/health":
                payload = api.health_payload()
            elif url.path == "/api/count":
                payload = api.count_payload(
                    self._param(params, "n"), self._param(params, "k"), limits
                )
            elif url.path == "/api/artin":
                payload = api.artin_payload(self._param(params, "limit"), limits)
            else:
                return self._send(404, {"code": "not_found", "message": f"no route {url.path}"})
            self._respond(None, started, payload, None)
        except ApiError as exc:
            self._respond(None, started, None, exc)

    def do_POST(self) -> None:
        started = time.perf_counter()
        path = urlsplit(self.path).path
        limits: Limits = self.server.limits
        request_id = None
        try:
            body = self._read_body()
            request_id = body.get("id")
            payload = self._post_payload(path, body, limits)
        except ApiError as exc:
            self._respond(request_id, started, None, exc)
            return
        except SearchCancelled:
            log.debug("client left during search, result dropped")
            self.close_connection = True
            return
        self._respond(request_id, started, payload, None)

    def _post_payload(self, path: str, body: dict, limits: Limits) -> dict:
        alphabet = body.get("alphabet")
        if path == "/api/ebwt":
            return api.ebwt_payload(body.get("parts"), alphabet, limits)
        if path == "/api/bwt":
            return api.bwt_payload(body.get("word"), alphabet, limits)
        if path == "/api/invert":
            return api.invert_payload(body.get("l"), alphabet, limits)
        if path == "/api/apply":
            return api.apply_payload(
                body.get("word"), body.get("parts_lengths"), body.get("k"), alphabet, limits
            )
        if path == "/api/search":
            return api.search_payload(
                body.get("word"),
                body.get("k"),
                body.get("limit"),
                alphabet,
                limits,
                interactive=True,
                should_stop=make_client_gone_checker(self.connection),
            )
        if path == "/api/family":
            return api.family_payload(body.get("k"), body.get("ratio"), limits)
        raise _NotFound(f"no route {path}")

    @staticmethod
    def _param(params: dict[str, str], name: str) -> str:
        if name not in params:
            raise MalformedInput(f"missing query parameter {name}")
        return params[name]


class _NotFound(ApiError):
    code = "not_found"
    status = 404


def create_server(port: int, limits: Limits = DEFAULT_LIMITS) -> ThreadingHTTPServer:
    """Bind the service; port 0 picks a free port (server.server_port)."""
    server = ThreadingHTTPServer(("", port), ApiHandler)
    server.limits = limits
    return server


def serve(port: int, limits: Limits = DEFAULT_LIMITS) -> None:
    """Run until interrupted."""
    server = create_server(port, limits)
    log.info("listening on port %d", server.server_port)
    print(f"ebwtlab service on http://localhost:{server.server_port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()

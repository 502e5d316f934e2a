#!/usr/bin/env python3
"""Tour of the HTTP/JSON service: every endpoint, the error taxonomy,
and the request-id envelope, against a throwaway in-process server.

Run from the repository root:  python demos/04_service_tour.py
"""

import json
import threading
import urllib.error
import urllib.request

from ebwtlab.server import create_server

server = create_server(0)  # port 0 = pick any free port
base = f"http://localhost:{server.server_port}"
threading.Thread(target=server.serve_forever, daemon=True).start()
print(f"serving on {base}\n")


def get(path):
    try:
        with urllib.request.urlopen(base + path) as response:
            return response.status, response.read().decode()
    except urllib.error.HTTPError as err:
        return err.code, err.read().decode()


def post(path, obj):
    request = urllib.request.Request(
        base + path, data=json.dumps(obj).encode(), headers={"Content-Type": "application/json"}
    )
    try:
        with urllib.request.urlopen(request) as response:
            return response.status, response.read().decode()
    except urllib.error.HTTPError as err:
        return err.code, err.read().decode()


# The read-only endpoints.
print("GET  /api/health          ", get("/api/health"))
print("GET  /api/count?n=6&k=1   ", get("/api/count?n=6&k=1"))
print("GET  /api/artin?limit=12  ", get("/api/artin?limit=12"))

# Transforms and the interactive apply/search pair the explorer uses.
print("\nPOST /api/ebwt   ", post("/api/ebwt", {"parts": ["baa", "bab"]}))
print("POST /api/bwt    ", post("/api/bwt", {"word": "banana"}))
print("POST /api/invert ", post("/api/invert", {"l": "bababa"}))
print("POST /api/apply  ", post("/api/apply", {"word": "baabab", "parts_lengths": [3, 3], "k": 2}))
print("POST /api/search ", post("/api/search", {"word": "baabab", "k": 2}))
print("POST /api/family ", post("/api/family", {"k": 1, "ratio": 1}))

# Two distinct error codes: requests that cannot be read at all, and
# well-formed requests refused by a size guard.
print("\nbad type:  ", post("/api/ebwt", {"parts": "baa,bab"}))
print("too large: ", post("/api/search", {"word": "ab" * 40, "k": 1}))
print("no route:  ", get("/api/missing"))

# Adding an id wraps the response with timing, for correlating
# concurrent requests.
print("\nwith id:   ", post("/api/ebwt", {"parts": ["baa", "bab"], "id": "tour-1"}))

server.shutdown()
server.server_close()
print("\nserver stopped")

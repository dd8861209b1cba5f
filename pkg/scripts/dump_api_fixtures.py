#!/usr/bin/env python3
"""Capture a scripted API conversation into the frontend test fixtures.

The browser client's tests replay these recorded wire exchanges through a
fake fetch, so the UI contract tests exercise the exact bytes the real
service produces. Re-run after changing wire formats, then re-run
tests/test_service.py to confirm the capture still matches live behavior.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from fastapi.testclient import TestClient

from chromachain.service import create_app

SESSION_TOKEN = "SESSION"

# exactly the conversation the browser client's contract tests drive, in order
STEPS = [
    ("POST", "/sessions", {"seed": 0}),
    ("GET", "/scenes", None),
    ("GET", "/scenes/bedroom", None),
    ("POST", "/sessions/{sid}/intent", {"text": "Warm and Cozy"}),
    ("POST", "/sessions/{sid}/schemes", None),
    ("PATCH", "/sessions/{sid}/scheme", {"choose": 0}),
    ("POST", "/sessions/{sid}/assignment", {"scene_id": "bedroom"}),
    ("GET", "/sessions/{sid}/stats", None),
    # a mood slider drag: one PATCH, downstream panels go stale
    ("PATCH", "/sessions/{sid}/concepts", {"tones": 1}),
    ("PATCH", "/sessions/{sid}/concepts", {"tones": 2}),
    ("POST", "/sessions/{sid}/schemes", None),
    ("PATCH", "/sessions/{sid}/scheme", {"choose": 0}),
    # lock the dominant, then regenerate: swatch must not move
    ("PATCH", "/sessions/{sid}/scheme", {"lock": ["dominant"]}),
    ("POST", "/sessions/{sid}/schemes", None),
    ("PATCH", "/sessions/{sid}/scheme", {"choose": 0}),
    ("POST", "/sessions/{sid}/assignment", {"scene_id": "bedroom"}),
    # element recolor round-trip
    ("POST", "/sessions/{sid}/refinement", {"element_id": "curtains", "color": "1060-Y70R"}),
    ("GET", "/sessions/{sid}/stats", None),
    ("GET", "/sessions/{sid}/export", None),
    ("GET", "/sessions/{sid}/session-file", None),
]


def main() -> int:
    client = TestClient(create_app(seed=0))
    sid = None
    steps_out = []
    for method, template, body in STEPS:
        path = template.replace("{sid}", sid) if sid else template
        response = client.request(method, path, json=body)
        payload = response.json()
        if sid is None:
            sid = payload["id"]
        normalized = json.loads(json.dumps(payload).replace(sid, SESSION_TOKEN))
        steps_out.append({
            "method": method,
            "path": template,
            "body": body,
            "status": response.status_code,
            "response": normalized,
        })
        print(f"{method:6s} {template:40s} {response.status_code}")
    fixtures = {"session_token": SESSION_TOKEN, "steps": steps_out}
    out = Path(__file__).resolve().parents[1] / "frontend" / "tests" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)
    target = out / "api_fixtures.json"
    target.write_text(json.dumps(fixtures, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

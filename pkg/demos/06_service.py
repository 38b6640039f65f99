"""
Serving queries over HTTP
=========================

The service loads the corpus once, then answers concurrent queries from
the shared read-only graph. Starting it here blocks until Ctrl-C; talk to
it from another terminal, e.g.:

    curl localhost:8472/api/health
    curl localhost:8472/api/paper/<id>
    curl -X POST localhost:8472/api/query \
         -H 'content-type: application/json' \
         -d '{"phrases": ["message passing networks"], "k_output": 20}'

The same server comes up via the command line with
`readpath serve --config fixtures/config.json`.
"""

from pathlib import Path

from readpath import Engine
from readpath.service import serve

FIXTURES = Path(__file__).parent.parent / "fixtures"

engine = Engine.from_config_file(FIXTURES / "config.json")
print(f"corpus loaded: {len(engine.graph)} papers")
print(f"binding {engine.config.service.bind_address} (Ctrl-C stops)")
serve(engine)

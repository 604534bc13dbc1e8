#!/usr/bin/env python3

"""
Entry point for the motivic density HTTP service.

This script creates the Flask application exposing graph validation, the surface
density formula and the oracle cross-check. The command-line tool is run with
`python -m motivic_density`.

@example
```bash
python run.py
gunicorn 'run:app'
```
"""

from motivic_density.api.app import create_app
from config import Config

app = create_app(Config)

if __name__ == '__main__':
    app.run(host=Config.HOST, port=Config.PORT, debug=Config.DEBUG)

import logging

from flask import Flask, jsonify
from flask_cors import CORS
from flask_injector import FlaskInjector
from injector import Injector
from werkzeug.exceptions import HTTPException

from motivic_density.api.routes import register_routes
from motivic_density.infrastructure.container import configure_container

"""
Flask application factory module.

Builds the HTTP service around the same injector container the command-line tool uses.
Every response is JSON, including unknown routes and wrong methods.

@example
```python
from motivic_density.api.app import create_app
from config import Config

app = create_app(Config)
app.run()
```
"""

logger = logging.getLogger(__name__)


def _http_error(e: HTTPException):
    return jsonify({'error': e.description, 'kind': e.name}), e.code


def create_app(config_object):
    """
    Create the HTTP service.

    @param config_object: The settings object, normally config.Config.
    @return: The Flask application with CORS, routes and dependency injection set up.
    """
    app = Flask(__name__)
    app.config.from_object(config_object)
    app.logger.setLevel(app.config.get('LOG_LEVEL', 'WARNING'))

    CORS(app)

    # Shared with the CLI; GRAPH_DIR and the DENSITY_* budgets come from app.config
    injector = Injector([lambda binder: configure_container(binder, app.config)])

    register_routes(app)
    app.register_error_handler(HTTPException, _http_error)

    FlaskInjector(app=app, injector=injector)

    logger.info('HTTP service ready, graphs under %s', app.config.get('GRAPH_DIR', '.'))
    return app

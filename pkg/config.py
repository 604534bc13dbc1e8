import logging
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

"""
Configuration module for the application.

This module loads environment variables and provides configuration settings for the
command-line tool and the HTTP service: oracle budgets, output mode, the directory
graph files are read from, logging and the Flask settings.

@example
```python
from config import Config

app = Flask(__name__)
app.config.from_object(Config)
```
"""

logger = logging.getLogger(__name__)


def _int_setting(name, default):
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning('%s=%r is not an integer, using default %d', name, raw, default)
        return default


class Config:
    """
    Configuration class for the application.

    This class contains all the configuration settings for the application.
    It loads values from environment variables with sensible defaults.

    @property DEBUG: Whether the HTTP service is in debug mode.
    @property SECRET_KEY: Secret key for the Flask application.
    @property HOST: Host the HTTP service binds to.
    @property PORT: Port the HTTP service listens on.
    @property DENSITY_PRECISION: Default truncation depth D of the oracle.
    @property DENSITY_WINDOW: Default stabilization window W.
    @property DENSITY_NMAX_MULTIPLIER: Default n_max as a multiple of the period.
    @property DENSITY_SEED: Default seed of the random commands.
    @property DENSITY_OUTPUT: 'human' or 'machine'.
    @property GRAPH_DIR: Base directory for relative graph and script paths.
    @property LOG_LEVEL: Level of the diagnostics written to standard error.
    """
    # Flask settings
    DEBUG = os.getenv('DEBUG', 'False').lower() in ('true', '1', 't')
    SECRET_KEY = os.getenv('SECRET_KEY', 'dev-key-change-in-production')
    HOST = os.getenv('HOST', '0.0.0.0')
    PORT = _int_setting('PORT', 5000)

    # Oracle settings
    DENSITY_PRECISION = _int_setting('DENSITY_PRECISION', 12)
    DENSITY_WINDOW = _int_setting('DENSITY_WINDOW', 3)
    DENSITY_NMAX_MULTIPLIER = _int_setting('DENSITY_NMAX_MULTIPLIER', 60)
    DENSITY_SEED = _int_setting('DENSITY_SEED', 0)
    DENSITY_OUTPUT = os.getenv('DENSITY_OUTPUT', 'human')

    # Files
    GRAPH_DIR = os.getenv('GRAPH_DIR', '.')

    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()

# Tests package initialization
import os

from motivic_density.infrastructure.repositories.graph_repository import parse_graph

GRAPH_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir, 'graphs'))


def load_fixture(name):
    """Parse one of the graph files shipped under graphs/."""
    with open(os.path.join(GRAPH_DIR, name), 'r', encoding='utf-8') as f:
        return parse_graph(f.read())

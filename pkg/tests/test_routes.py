import json

import pytest
from flask import Flask
from flask_injector import FlaskInjector
from injector import Injector, singleton
from unittest.mock import MagicMock

from motivic_density.api.routes import register_routes
from motivic_density.core.app_config import AppConfig
from motivic_density.core.use_cases.curve_density_use_case import CurveDensityUseCase
from motivic_density.infrastructure.container import configure_container
from motivic_density.infrastructure.repositories.graph_repository import graph_to_payload
from tests import GRAPH_DIR, load_fixture


class TestRoutes:
    """Test cases for API routes."""

    @pytest.fixture
    def app(self):
        """Create a Flask app for testing."""
        app = Flask(__name__)
        app.config['TESTING'] = True

        # Register routes
        register_routes(app)

        config = AppConfig({'GRAPH_DIR': GRAPH_DIR, 'DENSITY_PRECISION': 6})
        injector = Injector([lambda binder: configure_container(binder, config)])
        FlaskInjector(app=app, injector=injector)

        return app

    @pytest.fixture
    def client(self, app):
        """Create a test client."""
        return app.test_client()

    def post_graph(self, client, url, name):
        return client.post(url, json=graph_to_payload(load_fixture(name)))

    def test_list_graphs(self, client):
        response = client.get('/api/graphs')

        assert response.status_code == 200
        graphs = json.loads(response.data)['graphs']
        assert 'e8.graph' in graphs
        assert graphs == sorted(graphs)

    def test_validate(self, client):
        response = self.post_graph(client, '/api/graphs/validate', 'e8.graph')

        assert response.status_code == 200
        assert json.loads(response.data) == {'ok': True, 'violations': [], 'warnings': []}

    def test_validate_violation(self, client):
        response = client.post('/api/graphs/validate', json={
            'vertices': [{'id': 'a', 'm': 4, 'q': '3/4'}], 'edges': [],
        })

        data = json.loads(response.data)
        assert response.status_code == 200
        assert data['ok'] is False
        assert data['violations'][0]['kind'] == 'RateBelowOne'

    def test_validate_not_json(self, client):
        response = client.post('/api/graphs/validate', data='vertices', content_type='text/plain')

        assert response.status_code == 400
        assert 'error' in json.loads(response.data)

    def test_validate_duplicate_id(self, client):
        response = client.post('/api/graphs/validate', json={
            'vertices': [{'id': 'a', 'm': 1, 'q': 1}, {'id': 'a', 'm': 2, 'q': 1}], 'edges': [],
        })

        assert response.status_code == 400
        assert json.loads(response.data)['kind'] == 'DuplicateVertexId'

    @pytest.mark.parametrize('name,expected', [
        ('e8.graph', '1/2'),
        ('smooth.graph', '1'),
    ])
    def test_density(self, client, name, expected):
        response = self.post_graph(client, '/api/graphs/density', name)

        data = json.loads(response.data)
        assert response.status_code == 200
        assert data['density']['canonical'] == expected
        assert data['rationalized'] is False

    def test_density_rationalize(self, client):
        response = self.post_graph(client, '/api/graphs/density?rationalize=1', 'symbolic.graph')

        data = json.loads(response.data)
        assert data['density']['canonical'] == '1'
        assert data['rationalized'] is True

    def test_density_inadmissible(self, client):
        response = client.post('/api/graphs/density', json={
            'vertices': [{'id': 'a', 'm': 1, 'q': 1}, {'id': 'b', 'm': 1, 'q': 1}],
            'edges': [['a', 'b']],
        })

        assert response.status_code == 422

    def test_oracle(self, client):
        response = self.post_graph(client, '/api/graphs/oracle', 'twovertex.graph')

        data = json.loads(response.data)
        assert response.status_code == 200
        assert data['match'] is True
        assert data['oracle']['precision'] == 6

    def test_oracle_budget_exhausted(self, client):
        response = self.post_graph(client, '/api/graphs/oracle?precision=2&nmax=1', 'e8.graph')

        assert response.status_code == 422
        assert json.loads(response.data)['kind'] == 'NoStabilization'

    def test_curve_density(self, client):
        response = client.post('/api/curves/density', json={'mults': [2, 3], 'oracle': True})

        assert response.status_code == 200
        assert json.loads(response.data) == {'mults': [2, 3], 'density': '5/6', 'oracle': '5/6', 'match': True}

    def test_curve_density_without_oracle(self, client):
        response = client.post('/api/curves/density', json={'mults': [4]})

        data = json.loads(response.data)
        assert data['density'] == '1/4'
        assert data['oracle'] is None

    @pytest.mark.parametrize('body,status', [
        ({'mults': '2,3'}, 400),
        ({}, 400),
        ({'mults': [0]}, 422),
        ({'mults': []}, 422),
        ([2, 3], 400),
        ('2,3', 400),
    ])
    def test_curve_density_bad_input(self, client, body, status):
        response = client.post('/api/curves/density', json=body)

        assert response.status_code == status


class TestRoutesUnexpectedErrors:
    """Test cases for failures outside the package errors."""

    @pytest.fixture
    def client(self):
        app = Flask(__name__)
        app.config['TESTING'] = True
        register_routes(app)

        self.mock_curve_use_case = MagicMock(spec=CurveDensityUseCase)

        def configure(binder):
            binder.bind(CurveDensityUseCase, to=self.mock_curve_use_case, scope=singleton)

        FlaskInjector(app=app, injector=Injector([configure]))
        return app.test_client()

    def test_internal_error(self, client):
        self.mock_curve_use_case.execute.side_effect = RuntimeError('boom')

        response = client.post('/api/curves/density', json={'mults': [2]})

        assert response.status_code == 500
        assert json.loads(response.data) == {'error': 'boom'}
        self.mock_curve_use_case.execute.assert_called_once_with([2], False)

    def test_undecodable_input_is_bad_request(self, client):
        self.mock_curve_use_case.execute.side_effect = UnicodeDecodeError('utf-8', b'\xff', 0, 1, 'invalid start byte')

        response = client.post('/api/curves/density', json={'mults': [2]})

        assert response.status_code == 400
        assert json.loads(response.data)['kind'] == 'UnicodeDecodeError'

from flask import Blueprint, request, jsonify
from injector import inject

from motivic_density.core.errors import (
    ClassSyntaxError,
    DuplicateVertexId,
    GraphSyntaxError,
    MotivicDensityError,
    ScriptSyntaxError,
    UnknownEndpoint,
)
from motivic_density.core.use_cases.compute_density_use_case import ComputeDensityUseCase
from motivic_density.core.use_cases.cross_check_use_case import CrossCheckUseCase
from motivic_density.core.use_cases.curve_density_use_case import CurveDensityUseCase
from motivic_density.core.use_cases.load_graph_use_case import LoadGraphUseCase
from motivic_density.core.use_cases.validate_graph_use_case import ValidateGraphUseCase
from motivic_density.infrastructure.repositories.graph_repository import GraphRepository
from motivic_density.infrastructure.services import report_renderer

"""
Routes module for the motivic density API.

This module defines the JSON endpoints. Graph bodies use the graph file schema. Parse
errors answer 400, domain errors (inadmissible graphs, oracle budget exhausted) 422.

@example
```python
from motivic_density.api.routes import register_routes

register_routes(app)
```
"""

PARSE_ERRORS = (
    GraphSyntaxError, DuplicateVertexId, UnknownEndpoint, ScriptSyntaxError, ClassSyntaxError, UnicodeDecodeError,
)


def _error_response(e):
    if isinstance(e, PARSE_ERRORS):
        return jsonify({'error': str(e), 'kind': type(e).__name__}), 400
    if isinstance(e, (MotivicDensityError, ValueError)):
        return jsonify({'error': str(e), 'kind': type(e).__name__}), 422
    return jsonify({'error': str(e)}), 500


def _graph_body(load_use_case: LoadGraphUseCase):
    payload = request.get_json(silent=True)
    if payload is None:
        raise GraphSyntaxError(None, 'request body must be a JSON graph object')
    return load_use_case.from_payload(payload)


def register_routes(app):
    """
    Register routes for the application.

    This function creates a Blueprint for the API routes and registers it with the Flask application.

    @param app: The Flask application instance.
    """
    api_bp = Blueprint('api', __name__)

    @api_bp.route('/api/graphs', methods=['GET'])
    @inject
    def list_graphs(graph_repository: GraphRepository):
        """
        List the graph files under GRAPH_DIR.

        @param graph_repository: The repository for graph files.
        @return: A JSON response with the file names.
        """
        try:
            return jsonify({'graphs': graph_repository.list_graphs()})
        except Exception as e:
            return _error_response(e)

    @api_bp.route('/api/graphs/validate', methods=['POST'])
    @inject
    def validate_graph(load_use_case: LoadGraphUseCase, validate_use_case: ValidateGraphUseCase):
        """
        Validate the graph in the request body.

        @return: A JSON response with the violations and warnings.
        """
        try:
            graph = _graph_body(load_use_case)
            report = validate_use_case.execute(graph)
            return jsonify(report_renderer.validation_payload(report))
        except Exception as e:
            return _error_response(e)

    @api_bp.route('/api/graphs/density', methods=['POST'])
    @inject
    def graph_density(load_use_case: LoadGraphUseCase, density_use_case: ComputeDensityUseCase):
        """
        Evaluate the surface density of the graph in the request body.

        Query parameter rationalize=1 substitutes L + 1 for genus:0 curve symbols.

        @return: A JSON response with the canonical form of the density.
        """
        try:
            graph = _graph_body(load_use_case)
            rationalize = request.args.get('rationalize', '0').lower() in ('1', 'true', 'yes')
            result = density_use_case.execute(graph, rationalize)
            return jsonify({
                'density': report_renderer.class_payload(result.density),
                'rationalized': result.rationalized,
                'warnings': [w.kind.value for w in result.report.warnings],
            })
        except Exception as e:
            return _error_response(e)

    @api_bp.route('/api/graphs/oracle', methods=['POST'])
    @inject
    def graph_oracle(load_use_case: LoadGraphUseCase, check_use_case: CrossCheckUseCase):
        """
        Cross-check the formula against the oracle on the graph in the request body.

        Query parameters precision, window and nmax (a multiple of the period) override
        the configured budget.

        @return: A JSON response with both truncations and the verdict.
        """
        try:
            graph = _graph_body(load_use_case)
            report = check_use_case.execute(
                graph,
                request.args.get('precision', type=int),
                request.args.get('window', type=int),
                request.args.get('nmax', type=int),
            )
            return jsonify(report_renderer.check_payload(report))
        except Exception as e:
            return _error_response(e)

    @api_bp.route('/api/curves/density', methods=['POST'])
    @inject
    def curve_density(curve_use_case: CurveDensityUseCase):
        """
        Density of a plane curve from {"mults": [...], "oracle": bool}.

        @return: A JSON response with the density and, on request, the oracle value.
        """
        try:
            payload = request.get_json(silent=True)
            if not isinstance(payload, dict):
                return jsonify({'error': 'request body must be a JSON object with "mults"'}), 400
            mults = payload.get('mults')
            if not isinstance(mults, list):
                return jsonify({'error': '"mults" must be a list of positive integers'}), 400
            result = curve_use_case.execute(mults, bool(payload.get('oracle', False)))
            return jsonify({
                'mults': list(result.branches.mults),
                'density': report_renderer.rational_text(result.density),
                'oracle': report_renderer.rational_text(result.oracle),
                'match': result.match,
            })
        except Exception as e:
            return _error_response(e)

    app.register_blueprint(api_bp)

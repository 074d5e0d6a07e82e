import json

import pytest

from vertex_bounds import dto, serializers
from vertex_bounds.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def cube_file(tmp_path, cube):
    path = tmp_path / 'cube.json'
    path.write_text(serializers.dumps(cube))
    return str(path)


def test_factors_count_k4(capsys):
    code, out = run(capsys, 'factors', 'count', '--graph', 'k4', '--r', '1')
    assert code == 0
    report = json.loads(out)
    assert report['schema_version'] == serializers.SCHEMA_VERSION
    assert report['result']['count'] == 3
    assert report['config']['subcommand'] == 'factors count'
    assert report['config']['inputs'] == { 'graph': 'k4' }


def test_factors_count_edge_list(capsys, tmp_path):
    path = tmp_path / 'c4.txt'
    path.write_text('0 1\n1 2\n2 3\n3 0\n')
    code, out = run(capsys, 'factors', 'count', '--graph', str(path), '--r', '1')
    assert code == 0
    assert json.loads(out)['result']['count'] == 2


def test_factors_polytope(capsys):
    code, out = run(capsys, 'factors', 'polytope', '--graph', 'k4', '--r', '1')
    assert code == 0
    assert json.loads(out)['result']['polytope']['n'] == 6


def test_gamma(capsys):
    code, out = run(capsys, 'gamma', '--alpha', '1', '--beta', '1')
    assert code == 0
    result = json.loads(out)['result']
    assert result['params']['gamma'] > 0
    assert result['check_221']


def test_gamma_graph(capsys):
    code, out = run(capsys, 'gamma-graph', '--k', '5', '--r', '2')
    assert code == 0
    assert json.loads(out)['result']['constants']['epsilon_kr'] == '1/15'


def test_gamma_graph_degree_condition(capsys):
    code, out = run(capsys, 'gamma-graph', '--k', '4', '--r', '2')
    assert code == 4
    assert json.loads(out)['error'] == 'hypothesis_failed'


def test_graph_check_gadget(capsys):
    code, out = run(capsys, 'graph', 'check', '--graph', 'gadget', '--k', '3', '--r', '1')
    assert code == 0
    result = json.loads(out)['result']
    assert not result['ok']
    assert not result['verdicts']['cut_condition']
    assert result['worst_cut']['size'] == 2


def test_certify(capsys, cube_file):
    code, out = run(capsys, 'certify', '--polytope', cube_file, '--seed', '1', '--trials', '300')
    assert code == 0
    witness = json.loads(out)['result']['witness']
    assert witness['distinct_vertices_found'] == 8
    assert len(witness['vertices']) == 8


def test_certify_requires_seed(capsys, cube_file):
    code, out = run(capsys, 'certify', '--polytope', cube_file)
    assert code == 2
    assert json.loads(out)['error'] == 'invalid_input'


def test_invalid_polytope_file(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"n": 2, "constraints": [{"normal": [1], "offset": "x"}]}')
    code, out = run(capsys, 'round', '--polytope', str(path))
    assert code == 2
    body = json.loads(out)
    assert body['error'] == 'invalid_input'
    assert 'constraints.0.offset' in body['errors']


def test_round(capsys, tmp_path):
    path = tmp_path / 'box.json'
    path.write_text(serializers.dumps(dto.HalfspaceSystem.box([3, 1])))
    code, out = run(capsys, 'round', '--polytope', str(path))
    assert code == 0
    result = json.loads(out)['result']
    assert result['verdicts'] == { 'contains_unit_ball': True, 'circumradius': True }
    assert result['alpha'] == '1'
    assert result['transform']['matrix'] == [['1/3', '0'], ['0', '1']]
    assert 1 <= float(result['transform']['radius_ratio']) < 1.001


def test_lemma21_norm(capsys):
    code, out = run(
        capsys, 'lemma21', '--kind', 'norm', '--n', '50', '--epsilon', '0.5',
        '--seed', '3', '--trials', '5000'
    )
    assert code == 0
    check = json.loads(out)['result']['check']
    assert check['kind'] == 'norm'
    assert check['satisfied']


def test_lemma21_sidak_random_slabs(capsys):
    code, out = run(
        capsys, 'lemma21', '--kind', 'sidak', '--n', '20', '--m', '30', '--rho', '2',
        '--seed', '4', '--trials', '5000'
    )
    assert code == 0
    assert json.loads(out)['result']['check']['satisfied']


def test_deep_point_random(capsys):
    code, out = run(
        capsys, 'deep-point', '--graph', 'petersen', '--k', '3', '--r', '1',
        '--random', '3', '--seed', '1'
    )
    assert code == 0
    result = json.loads(out)['result']
    assert result['checked'] == 3
    assert result['ok']


def test_pipeline_petersen(capsys):
    argv = ('pipeline', '--graph', 'petersen', '--k', '3', '--r', '1', '--seed', '1')
    code, first = run(capsys, *argv)
    assert code == 0
    result = json.loads(first)['result']
    assert result['count'] == 6
    assert result['gamma_graph'] > 0
    assert result['dim_L'] == 5
    assert result['hypotheses_ok']
    assert all(result['verdicts'].values())
    assert result['skipped_stages'] == ['certification', 'enumeration', 'polytope']
    assert result['certified_vertices'] is None
    _, second = run(capsys, *argv)
    assert first == second


def test_pipeline_small_graph_runs_every_stage(capsys):
    code, out = run(capsys, 'pipeline', '--graph', 'k4', '--k', '3', '--r', '1', '--seed', '2', '--trials', '200')
    assert code == 0
    result = json.loads(out)['result']
    assert result['stages'] == { 'polytope': 'built', 'enumeration': 'done', 'certification': 'done' }
    assert result['skipped_stages'] == []
    assert result['certified_vertices'] == 3
    assert result['verdicts']['oracle_equivalence']
    assert result['verdicts']['slab_containment']


def test_pipeline_gadget_fails_cut_condition(capsys):
    code, out = run(capsys, 'pipeline', '--graph', 'gadget', '--k', '3', '--r', '1', '--seed', '1')
    assert code == 4
    body = json.loads(out)
    assert body['error'] == 'hypothesis_failed'
    assert 'check_cut_condition' in body['detail']


def test_csv_and_human_formats(capsys):
    code, out = run(capsys, 'factors', 'count', '--graph', 'k4', '--r', '1', '--format', 'csv')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'key,value'
    assert 'result.count,3' in lines
    code, out = run(capsys, 'factors', 'count', '--graph', 'k4', '--r', '1', '--format', 'human')
    assert code == 0
    assert 'count: 3' in out


def test_out_file(capsys, tmp_path):
    path = tmp_path / 'report.json'
    code, out = run(capsys, 'factors', 'count', '--graph', 'k33', '--r', '1', '--out', str(path))
    assert code == 0
    assert out == ''
    assert json.loads(path.read_text())['result']['count'] == 6


def test_config_file(capsys, tmp_path):
    path = tmp_path / 'settings.yaml'
    path.write_text('FACTOR_MAX_EDGES: 5\n')
    code, out = run(capsys, 'factors', 'count', '--graph', 'k4', '--r', '1', '--config', str(path))
    assert code == 2
    assert json.loads(out)['error'] == 'invalid_input'


def test_lemma21_tail(capsys):
    code, out = run(
        capsys, 'lemma21', '--kind', 'tail', '--a', '1,0', '--tau', '1',
        '--seed', '5', '--trials', '5000'
    )
    assert code == 0
    assert json.loads(out)['result']['check']['satisfied']


def test_lemma21_sidak_from_file(capsys, tmp_path):
    path = tmp_path / 'slabs.yaml'
    path.write_text('u:\n  - [1/2, 0]\n  - [0, 1]\n')
    code, out = run(
        capsys, 'lemma21', '--kind', 'sidak-product', '--rho', '1', '--slabs', str(path),
        '--seed', '6', '--trials', '5000'
    )
    assert code == 0
    assert json.loads(out)['result']['check']['kind'] == 'sidak-product'


def test_certify_unbounded_polytope(capsys, tmp_path):
    path = tmp_path / 'wedge.json'
    path.write_text(json.dumps({
        'n': 2,
        'constraints': [
            { 'normal': [-1, 0], 'offset': 0 },
            { 'normal': [1, 0], 'offset': 1 },
            { 'normal': [0, -1], 'offset': 0 },
        ],
    }))
    code, out = run(capsys, 'certify', '--polytope', str(path), '--seed', '1', '--trials', '20')
    assert code == 3
    assert json.loads(out)['error'] == 'computation_failed'

# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

"""
pipeline:  the stage graph behind the command line

Each stage returns a Verdict.  A stage whose dependency failed (or was
blocked) is reported as blocked; stages that need a duality on an algebra
without one are not_applicable.
"""

from __future__ import print_function, absolute_import, division
import os
import sys
import time
import logging
import argparse
from collections import OrderedDict
from multiprocessing import Pool
import six

from . import linalg
from .qhk import QhkReport, Verdict
from .core_algebra import parse_presentation, build_algebra, validate_duality
from .graded_modules import simple
from .quasi_hereditary import check_quasi_hereditary, verify_bgg_reciprocity, verify_delta_nabla_orthogonality, \
    StandardFamily
from .homological import is_classical_koszul, is_standard_koszul, cartan_matrix, ext_table, bar_ext_oracle, \
    BarResolution, Resolution
from .delta_koszul import find_height_function, check_condition_H, delta_regrade, verify_degree_zero_isomorphism, \
    check_delta_self_orthogonality, verify_standard_to_simple, costandard_to_simple_check, propagate_heights, \
    height_uniqueness, exhaustive_heights
from .gamma import build_gamma, gabriel_presentation, check_presentation, match_relation_space, check_directed, \
    h_regrade_gamma, check_gamma_classical_koszul, double_dual_dims, gamma_order
from .fixtures import registry, is_fixture
from .exceptions import QhkError, PresentationError, FieldError, InfiniteAlgebraError, GammaError, \
    OracleGuardError

log = logging.getLogger(__name__)

STAGES = OrderedDict([
    ('parse', ()),
    ('build', ('parse',)),
    ('duality', ('build',)),
    ('classical_koszul', ('build',)),
    ('quasi_hereditary', ('build',)),
    ('bgg', ('quasi_hereditary', 'duality')),
    ('standard_koszul', ('quasi_hereditary',)),
    ('height_function', ('standard_koszul',)),
    ('condition_H', ('height_function',)),
    ('delta_regrade', ('condition_H',)),
    ('degree_zero_iso', ('delta_regrade',)),
    ('delta_self_orthogonal', ('degree_zero_iso',)),
    ('gamma_built', ('delta_self_orthogonal',)),
    ('gamma_directed', ('gamma_built',)),
    ('gamma_koszul', ('gamma_directed',)),
    ('costandard_simple', ('delta_self_orthogonal', 'duality')),
    ('double_dual_dims', ('gamma_built',)),
])

INPUT_ERRORS = (PresentationError, FieldError, InfiniteAlgebraError)


def default_options(**kwargs):
    """
    Options of one run (the CLI builds the same namespace).

    field:  'q' or 'p:<prime>'
    max_degree:  length cutoff of build_algebra [4 r (max relation length)]
    n_max:  last homological degree [dim of the algebra]
    stages:  stages to run (with their dependencies) [all]
    oracle_depth, oracle_guard, oracle_cap:  bar-resolution oracle limits [2, 120, 4000]
    height_bound:  value bound of the exhaustive height search [3 r]
    prime:  prime of the field comparison oracle [101]
    skip_bar:  skip the bar-resolution oracle
    timing:  include per-stage timings in reports
    """
    opts = argparse.Namespace(field='q', max_degree=None, n_max=None, stages=None, oracle_depth=2,
                              oracle_guard=120, oracle_cap=4000, height_bound=None, prime=101, skip_bar=False,
                              timing=False)
    for k, v in six.iteritems(kwargs):
        setattr(opts, k, v)
    return opts


def stage_closure(names):
    """The named stages together with everything they depend on."""
    out = set()
    todo = list(names)
    while todo:
        s = todo.pop()
        if s not in STAGES:
            raise ValueError("unknown stage '{}' (stages: {})".format(s, ', '.join(STAGES)))
        if s not in out:
            out.add(s)
            todo.extend(STAGES[s])
    return out


def resolve_input(name, stdin=None):
    """
    Presentation text for a file name, a registered fixture or '-' (stdin).

    Returns (text, fixture_name or None).
    """
    if name == '-':
        return (stdin if stdin is not None else sys.stdin).read(), None
    if os.path.exists(name):
        with open(name, 'r') as f:
            return f.read(), None
    if is_fixture(name):
        return registry.text(name), name.strip().upper()
    raise PresentationError("'{}' is neither a file nor a fixture (fixtures: {})"
                            .format(name, ', '.join(registry.names())))


def _layer_text(layers):
    out = []
    for layer in layers:
        parts = []
        for v in sorted(layer):
            n = layer[v]
            parts.append('S{}'.format(v) if n == 1 else '{}S{}'.format(n, v))
        out.append(' + '.join(parts))
    return ' | '.join(out)


class PipelineReport(QhkReport):
    """
    Report of one command.

    Payload:
        stages:  stage -> {'status', 'details', 'certificate'}
        data:  dimension tables, h, Gamma and its presentation
        oracles:  oracle name -> comparison (oracle command)
        timing:  stage -> seconds (only with --timing)
        exit_code:  0 ok, 1 input error, 2 a check failed
    """
    payload_attributes = ['stages', 'data', 'oracles', 'timing', 'exit_code']

    def __init__(self, comment=None, **kwargs):
        for d in self.payload_attributes:
            setattr(self, d, None)
        super(PipelineReport, self).__init__(comment=comment, **kwargs)

    def to_dict(self, payload_attributes=None):
        if payload_attributes is None:
            payload_attributes = self.payload_attributes
        return super(PipelineReport, self).to_dict(payload_attributes)

    def status(self, stage):
        return self.stages[stage]['status'] if self.stages and stage in self.stages else None

    def to_text(self):
        lines = ['{} {} (field {})'.format(self.command, self.source, self.field)]
        if self.stages:
            for name, s in six.iteritems(self.stages):
                lines.append('  {:<24s}{}'.format(name, s['status']))
                if s.get('certificate') is not None and s['status'] == 'fail':
                    lines.append('      {}'.format(s['certificate']))
        data = self.data or {}
        if 'algebra' in data:
            lines.append('dim {} with graded dims {}'.format(data['algebra']['dim'], data['algebra']['dims']))
        if 'standard' in data:
            lines.append('standard modules (radical layers, top first):')
            for i, layers in sorted(data['standard'].items(), key=lambda x: int(x[0])):
                lines.append('  Delta_{}: {}'.format(i, _layer_text([{int(v): n for v, n in l.items()}
                                                                     for l in layers])))
        if 'h' in data:
            lines.append('h = ({})'.format(', '.join(str(data['h'][k]) for k in sorted(data['h'], key=int))))
        if 'delta_dims' in data:
            lines.append('Delta-graded dims {}'.format(data['delta_dims']))
        if 'gamma' in data:
            g = data['gamma']
            lines.append('Gamma: dim {}, Ext-graded dims {}'.format(g['dim'], g['dims']))
            if 'deg_H_dims' in g:
                lines.append('Gamma under deg_H: dims {}'.format(g['deg_H_dims']))
        if self.oracles:
            for name, o in sorted(self.oracles.items()):
                lines.append('  oracle {:<18s}{}'.format(name, o['status']))
        return '\n'.join(lines) + '\n'

    def info(self):
        print(self.to_text())


class Analysis(object):
    """
    State shared by the stages of one run.

    Parameters:
    ------------
    text:  presentation source
    options:  namespace from default_options
    fixture:  registered fixture name, used for the reference presentation of Gamma
    """

    def __init__(self, text, options, fixture=None):
        self.text = text
        self.options = options
        self.fixture = fixture
        self.field = linalg.Field(options.field)
        self.data = OrderedDict()
        self.p = None
        self.alg = None
        self.family = None
        self.h = None
        self.dalg = None
        self.dfamily = None
        self.tables = None
        self.gamma = None
        self.pres = None

    @property
    def n_max(self):
        return self.options.n_max if self.options.n_max is not None else self.alg.dim

    def stage_parse(self):
        self.p = parse_presentation(self.text, field=self.field)
        p = self.p
        return Verdict('parse', True, details={'vertices': p.r, 'arrows': len(p.arrows), 'relations': len(p.relations),
                                               'order': p.order, 'duality': p.duality is not None})

    def stage_build(self):
        alg = build_algebra(self.p, self.options.max_degree)
        self.alg = alg
        self.data['algebra'] = {'dim': alg.dim, 'dims': alg.dims()}
        details = {'dim': alg.dim, 'dims': alg.dims(),
                   'projective_dims': [len(alg.from_source(i)) for i in range(1, alg.r + 1)],
                   'cartan': cartan_matrix(alg).tolist()}
        return Verdict('build', True, details=details)

    def stage_duality(self):
        if self.p.duality is None:
            return None
        return validate_duality(self.alg, self.p)

    def stage_classical_koszul(self):
        return is_classical_koszul(self.alg, n_max=self.n_max)

    def stage_quasi_hereditary(self):
        v = check_quasi_hereditary(self.alg)
        self.family = v.value
        self.data['standard'] = {str(i): [{str(k): n for k, n in layer.items()} for layer in self.family.layers[i]]
                                 for i in range(1, self.alg.r + 1)}
        return v

    def stage_bgg(self):
        v = verify_bgg_reciprocity(self.alg, self.family)
        orth = verify_delta_nabla_orthogonality(self.alg, self.n_max, self.family)
        details = dict(v.details, delta_nabla=orth.details)
        cert = v.certificate if v.certificate is not None else orth.certificate
        return Verdict('bgg', v.passed and orth.passed, details=details, certificate=cert)

    def stage_standard_koszul(self):
        return is_standard_koszul(self.alg, self.family, self.n_max)

    def stage_height_function(self):
        v = find_height_function(self.alg, self.family, verify=False)
        self.h = v.value
        if self.h is not None:
            self.data['h'] = self.h.to_dict()
        return v

    def stage_condition_H(self):
        return check_condition_H(self.alg, self.h, self.family)

    def stage_delta_regrade(self):
        self.dalg = delta_regrade(self.alg, self.h)
        self.data['delta_dims'] = self.dalg.dims()
        return Verdict('delta_regrade', True, details={'dims': self.dalg.dims(),
                                                       'arrow_degrees': self.dalg.arrow_degrees})

    def stage_degree_zero_iso(self):
        return verify_degree_zero_isomorphism(self.dalg, self.family)

    def stage_delta_self_orthogonal(self):
        self.dfamily = StandardFamily(self.dalg)
        v = check_delta_self_orthogonality(self.dalg, self.n_max, self.dfamily)
        self.tables = v.value['tables']
        k = verify_standard_to_simple(self.alg, self.h, self.family, self.dalg, self.dfamily, self.n_max)
        details = dict(v.details, standard_to_simple=k.details)
        cert = v.certificate if v.certificate is not None else k.certificate
        return Verdict('delta_self_orthogonal', v.passed and k.passed, details=details, certificate=cert)

    def stage_gamma_built(self):
        G = build_gamma(self.dalg, self.tables)
        self.gamma = G
        self.pres = gabriel_presentation(G)
        v = check_presentation(G, self.pres)
        details = dict(v.details, gamma_dim=G.dim, gamma_dims=G.dims(), presentation=self.pres.to_dict())
        passed, cert = v.passed, v.certificate
        ref = registry.gamma_reference(self.fixture) if self.fixture else None
        if ref is not None:
            m = match_relation_space(self.pres, ref[0], ref[1])
            details['reference_match'] = m.passed
            if not m and cert is None:
                passed, cert = False, dict(m.certificate or {}, check='reference presentation')
        self.data['gamma'] = {'dim': G.dim, 'dims': G.dims(),
                              'presentation': self.pres.to_text(order=gamma_order(self.h, G.r))}
        return Verdict('gamma_built', passed, details=details, certificate=cert)

    def stage_gamma_directed(self):
        v = check_directed(self.gamma, self.h)
        Gh = h_regrade_gamma(self.gamma, self.h)
        self.data['gamma']['deg_H_dims'] = Gh.dims()
        v.details['deg_H_dims'] = Gh.dims()
        return v

    def stage_gamma_koszul(self):
        return check_gamma_classical_koszul(self.gamma, self.pres, self.h)

    def stage_costandard_simple(self):
        return costandard_to_simple_check(self.dalg, self.h, self.family, self.dfamily, self.n_max)

    def stage_double_dual_dims(self):
        return double_dual_dims(self.dalg, self.gamma, self.pres, self.dfamily)


def run_pipeline(text, options=None, source='-', fixture=None, command='analyze'):
    """
    Run the stages and collect a PipelineReport.

    Parameters:
    ------------
    text:  presentation source
    options:  namespace from default_options [defaults]
    source:  input name for the report
    fixture:  registered fixture name, if the input is one
    """
    options = options if options is not None else default_options()
    selected = stage_closure(options.stages) if options.stages else set(STAGES)
    analysis = Analysis(text, options, fixture=fixture)
    stages = OrderedDict()
    timing = OrderedDict()
    input_error = False
    for name, deps in six.iteritems(STAGES):
        if name not in selected:
            stages[name] = {'status': 'skipped'}
            continue
        before = [stages[d]['status'] for d in deps]
        if any(s in ('fail', 'blocked') for s in before):
            stages[name] = {'status': 'blocked'}
            continue
        if any(s == 'not_applicable' for s in before):
            stages[name] = {'status': 'not_applicable'}
            continue
        t0 = time.time()
        log.info("stage %s", name)
        try:
            v = getattr(analysis, 'stage_' + name)()
        except INPUT_ERRORS as e:
            if name not in ('parse', 'build'):
                raise
            input_error = True
            v = Verdict(name, False, certificate={'error': str(e), 'type': type(e).__name__})
        except QhkError as e:
            log.warning("stage %s raised %s", name, e)
            v = Verdict(name, False, certificate={'error': str(e), 'type': type(e).__name__})
        timing[name] = round(time.time() - t0, 4)
        if v is None:
            stages[name] = {'status': 'not_applicable'}
            continue
        entry = {'status': 'pass' if v.passed else 'fail', 'details': v.details}
        if v.certificate is not None:
            entry['certificate'] = v.certificate
        stages[name] = entry
        log.info("stage %s: %s", name, entry['status'])
    report = PipelineReport(command=command, source=source, field=analysis.field.name)
    report.stages = stages
    report.data = analysis.data
    if options.timing:
        report.timing = timing
    if input_error:
        report.exit_code = 1
    elif any(s['status'] == 'fail' for s in six.itervalues(stages)):
        report.exit_code = 2
    else:
        report.exit_code = 0
    report.analysis = analysis
    return report


def cmd_analyze(name, options=None, stdin=None):
    """Full pipeline on a file, fixture or '-'."""
    text, fixture = resolve_input(name, stdin)
    return run_pipeline(text, options, source=name, fixture=fixture)


def _analyze_job(job):
    text, options, name, fixture = job
    report = run_pipeline(text, options, source=name, fixture=fixture)
    report.analysis = None
    return report


def analyze_many(names, options=None, parallel=1, stdin=None):
    """Reports for several inputs, evaluated in a process pool when parallel > 1."""
    options = options if options is not None else default_options()
    jobs = []
    for name in names:
        text, fixture = resolve_input(name, stdin)
        jobs.append((text, options, name, fixture))
    if parallel > 1 and len(jobs) > 1:
        pool = Pool(processes=parallel)
        try:
            return pool.map(_analyze_job, jobs)
        finally:
            pool.close()
            pool.join()
    return [_analyze_job(job) for job in jobs]


def cmd_gamma(name, options=None, stdin=None):
    """
    Presentation text of Gamma (input grammar, vertices ordered by decreasing height).

    Returns (text, report).
    """
    options = options if options is not None else default_options()
    opts = argparse.Namespace(**vars(options))
    opts.stages = ['gamma_built']
    report = cmd_analyze(name, opts, stdin)
    status = report.status('gamma_built')
    if status != 'pass':
        blocked = [s for s, e in six.iteritems(report.stages) if e['status'] == 'fail']
        raise GammaError("Gamma of {} is not available: gamma_built is {} (failed: {})"
                         .format(name, status, ', '.join(blocked) or 'none'))
    a = report.analysis
    text = a.pres.to_text(order=gamma_order(a.h, a.gamma.r), header='Gamma of {}'.format(name))
    return text, report


def _field_oracle(a, options):
    prime = linalg.Field('p:{}'.format(options.prime))
    try:
        alg_p = build_algebra(parse_presentation(a.text, field=prime), options.max_degree)
    except FieldError as e:
        return {'status': 'disagree', 'error': str(e)}
    same = alg_p.slot_dims() == a.alg.slot_dims()
    return {'status': 'agree' if same else 'disagree', 'field': prime.name,
            'dims': [a.alg.dims(), alg_p.dims()]}


def _height_oracle(a, options):
    h, cert = propagate_heights(a.alg)
    sols = exhaustive_heights(a.alg, a.family, options.height_bound)
    if h is None or not check_condition_H(a.alg, h, a.family):
        ok = not sols
        return {'status': 'agree' if ok else 'disagree', 'propagation': None, 'solutions': len(sols),
                'certificate': cert}
    uniq = height_uniqueness(a.alg, a.family, options.height_bound)
    ok = bool(uniq) and any(s.normalized() == h for s in sols)
    return {'status': 'agree' if ok else 'disagree', 'propagation': h.to_dict(), 'solutions': len(sols),
            'uniqueness': uniq.details}


def _bar_oracle(a, options):
    alg = a.alg
    pairs = []
    modules = [simple(alg, i) for i in range(1, alg.r + 1)] + \
        [a.family.delta[i] for i in range(1, alg.r + 1)]
    compared = guarded = 0
    for M in modules:
        bar_res = BarResolution(M, cap=options.oracle_cap)
        res = Resolution(M)
        for N in modules:
            try:
                bar = bar_ext_oracle(M, N, options.oracle_depth, options.oracle_guard, res=bar_res)
            except OracleGuardError as e:
                log.warning("bar oracle skipped for %s: %s", M.label, e)
                guarded += len(modules)
                break
            minimal = dict(ext_table(M, N, options.oracle_depth, res=res).dims)
            compared += 1
            if bar != minimal:
                pairs.append({'M': M.label, 'N': N.label,
                              'bar': [[n, j, d] for (n, j), d in sorted(bar.items())],
                              'minimal': [[n, j, d] for (n, j), d in sorted(minimal.items())]})
    status = 'disagree' if pairs else ('guarded' if not compared else 'agree')
    return {'status': status, 'compared': compared, 'guarded': guarded, 'discrepancies': pairs}


def cmd_oracle(name, options=None, stdin=None):
    """Compare the fast computations with brute-force oracles."""
    options = options if options is not None else default_options()
    opts = argparse.Namespace(**vars(options))
    opts.stages = ['quasi_hereditary']
    text, fixture = resolve_input(name, stdin)
    report = run_pipeline(text, opts, source=name, fixture=fixture, command='oracle')
    a = report.analysis
    if report.exit_code == 1 or a.family is None:
        return report
    oracles = OrderedDict()
    oracles['field'] = _field_oracle(a, options)
    oracles['height'] = _height_oracle(a, options)
    if options.skip_bar:
        oracles['bar'] = {'status': 'skipped'}
    else:
        oracles['bar'] = _bar_oracle(a, options)
    report.oracles = oracles
    if any(o['status'] == 'disagree' for o in six.itervalues(oracles)):
        report.exit_code = 2
    else:
        report.exit_code = 0
    return report


def cmd_example(name=None):
    """Presentation text of a fixture, or the list of names."""
    if name is None:
        return '\n'.join(registry.names()) + '\n'
    return registry.text(name)

# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

"""
Command line front end:  qhk analyze | gamma | oracle | example
"""

from __future__ import print_function, absolute_import, division
import sys
import gzip
import json
import logging
import argparse

from . import pipeline
from .qhk import fix_json_list
from .exceptions import QhkError


def _add_run_options(ap):
    ap.add_argument('--field', help="base field:  q or p:<prime>", default='q')
    ap.add_argument('--max-degree', dest='max_degree', help="path length cutoff for the basis", type=int,
                    default=None)
    ap.add_argument('--n-max', dest='n_max', help="last homological degree (default dim of the algebra)",
                    type=int, default=None)
    ap.add_argument('--format', help="report format", choices=['json', 'text'], default='json')
    ap.add_argument('-o', '--output', help="write the report here (.gz for gzip)", default=None)
    ap.add_argument('--timing', help="include per-stage timings", action='store_true')


def build_parser():
    ap = argparse.ArgumentParser(prog='qhk', description="Quasi-hereditary and Koszul checks for quiver algebras.")
    ap.add_argument('-v', '--verbose', help="more logging on stderr (repeatable)", action='count', default=0)
    sub = ap.add_subparsers(dest='command')

    a = sub.add_parser('analyze', help="run the full pipeline")
    a.add_argument('inputs', nargs='+', help="presentation files, fixture names or '-' for stdin")
    _add_run_options(a)
    a.add_argument('--stages', help="csv list of stages (dependencies are added)", default=None)
    a.add_argument('--parallel', help="number of worker processes", type=int, default=1)

    g = sub.add_parser('gamma', help="print the presentation of Gamma")
    g.add_argument('input', help="presentation file, fixture name or '-'")
    _add_run_options(g)

    o = sub.add_parser('oracle', help="compare with brute-force oracles")
    o.add_argument('input', help="presentation file, fixture name or '-'")
    _add_run_options(o)
    o.add_argument('--skip-bar', dest='skip_bar', help="skip the bar-resolution oracle", action='store_true')
    o.add_argument('--oracle-depth', dest='oracle_depth', type=int, default=2)
    o.add_argument('--oracle-guard', dest='oracle_guard', type=int, default=120)
    o.add_argument('--height-bound', dest='height_bound', type=int, default=None)
    o.add_argument('--prime', type=int, default=101)

    e = sub.add_parser('example', help="print a fixture presentation (or list them)")
    e.add_argument('name', nargs='?', default=None)
    return ap


def options_from_args(args):
    kw = {}
    for k in ('field', 'max_degree', 'n_max', 'timing', 'skip_bar', 'oracle_depth', 'oracle_guard',
              'height_bound', 'prime'):
        if hasattr(args, k):
            kw[k] = getattr(args, k)
    stages = getattr(args, 'stages', None)
    if stages:
        kw['stages'] = [s.strip() for s in stages.split(',') if s.strip()]
    return pipeline.default_options(**kw)


def _emit(text, output=None):
    if output is None:
        sys.stdout.write(text)
        return
    w_open = gzip.open if output.lower().endswith('.gz') else open
    with w_open(output, 'wb') as f:
        f.write(text.encode('utf-8'))


def _render(reports, fmt):
    if fmt == 'text':
        return ''.join(r.to_text() for r in reports)
    if len(reports) == 1:
        return reports[0].to_json() + '\n'
    jsd = json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=4, separators=(',', ':'))
    return fix_json_list(jsd) + '\n'


def main(argv=None):
    """Run the command line; returns the exit code."""
    ap = build_parser()
    args = ap.parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    if args.command is None:
        ap.print_help()
        return 1
    try:
        if args.command == 'example':
            sys.stdout.write(pipeline.cmd_example(args.name))
            return 0
        options = options_from_args(args)
        if args.command == 'analyze':
            reports = pipeline.analyze_many(args.inputs, options, parallel=args.parallel)
            _emit(_render(reports, args.format), args.output)
            return max(r.exit_code for r in reports)
        if args.command == 'gamma':
            text, report = pipeline.cmd_gamma(args.input, options)
            _emit(text, args.output)
            return 0
        if args.command == 'oracle':
            report = pipeline.cmd_oracle(args.input, options)
            _emit(_render([report], args.format), args.output)
            return report.exit_code
    except (QhkError, ValueError, IOError) as e:
        print("qhk: {}".format(e), file=sys.stderr)
        return 1
    return 1

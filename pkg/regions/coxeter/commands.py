# Copyright 2021 Canonical Ltd.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command line front end of regions.coxeter.

Exit status is 0 on success, 1 when a verdict or identity check fails,
2 on bad input and 3 when a size guard would be breached.
"""

import argparse
import collections
import logging
import os
import sys

import regions.coxeter.utilities.cli as cli_utils
import regions.coxeter.utilities.exceptions as regions_exceptions
import regions.coxeter.utilities.generic as generic_utils
from regions.coxeter.arrangements import arrangement as arrangement_module
from regions.coxeter.arrangements import chambers as chambers_module
from regions.coxeter.arrangements import roots as roots_module
from regions.coxeter.restrictions import dpk
from regions.coxeter.restrictions import theorem

VERBS = ('chambers', 'zeta', 'exponents', 'check', 'dpk', 'table',
         'restrict', 'presets')
FORMATS = ('text', 'rows')

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

Command = collections.namedtuple('Command', ['verb', 'source', 'options'])

Source = collections.namedtuple(
    'Source', ['name', 'arrangement', 'root_system', 'preset', 'params'])

DEFAULT_OPTIONS = {
    'base': 'dominant',
    'format': 'text',
    'output': None,
    'corpus': None,
    'slow': False,
    'reduced': False,
    'list': False,
    'guards': None,
}


def resolve_source(source, corpus_path=None):
    """Turn a source argument into an arrangement.

    ``D:p:k`` builds D_p^k, an existing path is read as an arrangement
    file, ``W/T`` is a corpus preset or the first parabolic of type T and
    ``W`` is the reflection arrangement of W.

    :param source: Source argument
    :type source: str
    :param corpus_path: Corpus used for preset names
    :type corpus_path: Optional[str]
    :rtype: Source
    :raises: regions_exceptions.InputError
    """
    if source is None:
        raise regions_exceptions.InputError("a source is required")
    if source.startswith('D:'):
        params = dpk.DpkParams.parse(source)
        return Source(source, dpk.build_dpk(params), None, None, params)
    if os.path.exists(source):
        return Source(source, arrangement_module.read_arrangement(source),
                      None, None, None)
    if '/' in source:
        try:
            preset = theorem.get_preset(
                source, theorem.load_corpus(corpus_path))
        except regions_exceptions.UnknownPreset:
            preset = theorem.preset_from_label(source)
        restriction = theorem.build_restriction(preset)
        return Source(source, restriction.restricted, None, preset, None)
    rs = roots_module.root_system(source)
    return Source(source, roots_module.coxeter_arrangement(rs), rs, None,
                  None)


def _dominant_position(source, chamber_set):
    if source.root_system is not None:
        return chambers_module.dominant_chamber(
            source.root_system, source.arrangement, chamber_set)
    if source.params is not None:
        return chambers_module.locate_chamber(
            chamber_set, dpk.base_code(source.params))
    raise regions_exceptions.InputError(
        "{} has no dominant chamber, name a base by its sign string or use "
        "'all'".format(source.name))


def _chambers(source, options, guards, executor):
    chamber_set = chambers_module.enumerate_chambers(
        source.arrangement, guards, executor)
    text = 'chambers: {}\n'.format(len(chamber_set))
    if options['list']:
        text += chambers_module.format_chambers(chamber_set)
    return EXIT_OK, text


def _zeta(source, options, guards, executor):
    arrangement = source.arrangement
    chamber_set = chambers_module.enumerate_chambers(
        arrangement, guards, executor)
    base = options['base']
    if base == 'all':
        polys = chambers_module.zeta_all_bases(
            arrangement, chamber_set, executor)
        counts = collections.Counter(polys)
        distinct = sorted(counts, key=lambda p: p.coefficients)
        if len(distinct) == 1:
            return EXIT_OK, '{}\nidentical for all {} bases\n'.format(
                distinct[0], len(chamber_set))
        lines = ['{}\t{} bases'.format(p, counts[p]) for p in distinct]
        return EXIT_OK, '\n'.join(lines) + '\n'
    if base == 'dominant':
        position = _dominant_position(source, chamber_set)
    else:
        position = chamber_set.index_of(base)
    value = chambers_module.zeta(arrangement, position, chamber_set)
    return EXIT_OK, '{}\n'.format(value)


def _exponents(source, options, guards, executor):
    found = arrangement_module.exponents(source.arrangement, guards)
    return EXIT_OK, 'exponents: {}\n'.format(
        ' '.join(str(e) for e in found.values))


def _render(reports, options):
    if options['format'] == 'rows':
        return theorem.format_rows(reports)
    return ''.join(theorem.format_report(r) for r in reports)


def _check(source, options, guards, executor):
    if source.preset is not None:
        report = theorem.check_preset(
            source.preset, guards, executor, reduced=options['reduced'])
    else:
        exponents = None
        if source.params is not None:
            exponents = dpk.dpk_exponents(source.params)
        report = theorem.search_factoring_base(
            source.arrangement, guards, executor, name=source.name,
            exponents=exponents)
    status = EXIT_OK if report.matches else EXIT_MISMATCH
    return status, _render([report], options)


def _dpk(source, options, guards, executor):
    if source.params is None:
        raise regions_exceptions.InputError(
            "dpk needs a D:p:k source, got {}".format(source.name))
    report = dpk.dpk_report(source.params, guards, executor)
    status = (EXIT_OK if report.zeta_match and report.walls_match
              else EXIT_MISMATCH)
    return status, dpk.format_dpk_rows([report])


def _table(options, guards, executor):
    corpus = theorem.load_corpus(options['corpus'])
    reports = theorem.theorem_table(
        corpus, guards, executor, strict=False,
        include_slow=options['slow'], reduced=options['reduced'])
    status = (EXIT_OK if all(r.matches for r in reports)
              else EXIT_MISMATCH)
    return status, _render(reports, options)


def _restrict(source, options, guards, executor):
    if not options['output']:
        raise regions_exceptions.InputError("restrict needs --output")
    arrangement_module.write_arrangement(source.arrangement,
                                         options['output'])
    logging.info("Wrote {} hyperplanes to {}".format(
        len(source.arrangement), options['output']))
    return EXIT_OK, None


def _presets(options):
    lines = []
    for preset in theorem.load_corpus(options['corpus']):
        flags = []
        if preset.slow:
            flags.append('slow')
        if preset.skip:
            flags.append('skip: {}'.format(preset.skip))
        expected = {True: 'yes', False: 'no'}.get(preset.expected, '-')
        lines.append('\t'.join(
            [preset.name, expected, ', '.join(flags) or '-']))
    return EXIT_OK, '\n'.join(lines) + '\n'


_SOURCE_VERBS = {
    'chambers': _chambers,
    'zeta': _zeta,
    'exponents': _exponents,
    'check': _check,
    'dpk': _dpk,
    'restrict': _restrict,
}


def _dispatch(command, guards, executor):
    options = command.options
    if command.verb == 'table':
        return _table(options, guards, executor)
    if command.verb == 'presets':
        return _presets(options)
    source = resolve_source(command.source, options['corpus'])
    return _SOURCE_VERBS[command.verb](source, options, guards, executor)


def run(command, stream=None):
    """Run one command and write its report.

    :param command: Command to run
    :type command: Command
    :param stream: Where reports go unless ``--output`` names a file
    :type stream: Optional[IO[str]]
    :returns: Exit status
    :rtype: int
    """
    stream = stream or sys.stdout
    options = dict(DEFAULT_OPTIONS)
    options.update(command.options or {})
    command = command._replace(options=options)
    if command.verb not in VERBS:
        logging.error("Unknown verb {}".format(command.verb))
        return EXIT_INPUT
    try:
        guards = options['guards'] or generic_utils.get_guards()
        with generic_utils.get_executor(
                generic_utils.guard_value(guards, 'threads')) as executor:
            status, text = _dispatch(command, guards, executor)
    except regions_exceptions.InputError as e:
        logging.error(str(e))
        return EXIT_INPUT
    except regions_exceptions.GuardExceeded as e:
        logging.error(str(e))
        return EXIT_GUARD
    except regions_exceptions.RegionsError as e:
        logging.error(str(e))
        return EXIT_MISMATCH
    if text is not None:
        if options['output'] and command.verb != 'restrict':
            with open(options['output'], 'w') as f:
                f.write(text)
        else:
            stream.write(text)
    return status


def _as_int(name, value):
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        raise regions_exceptions.InputError(
            "--{} must be an integer".format(name.replace('_', '-')))


def run_from_cli(argv=None):
    """Run regions-coxeter from the command line.

    :param argv: Arguments, ``sys.argv[1:]`` if unset
    :type argv: Optional[List[str]]
    :returns: Exit status
    :rtype: int
    """
    parser = argparse.ArgumentParser(
        prog='regions-coxeter',
        description="Chambers, rank generating functions and factorization "
                    "verdicts for Coxeter arrangements and restrictions.",
        epilog="Exponents are printed in increasing order, so check D:5:1 "
               "reports 1 3 5 5 7.")
    parser.add_argument('verb', choices=VERBS)
    parser.add_argument('source', nargs='?', default=None,
                        help="W, W/T, D:p:k or an arrangement file")
    parser.add_argument('--base', default='dominant',
                        help="'all', 'dominant' or a +- sign string")
    parser.add_argument('--config', default=None,
                        help="YAML file with a guards mapping")
    parser.add_argument('--threads', default=None)
    parser.add_argument('--format', choices=FORMATS, default='text')
    parser.add_argument('--output', '-o', default=None)
    parser.add_argument('--corpus', default=None,
                        help="Preset corpus file")
    parser.add_argument('--log-level', dest='log_level', default='INFO')
    parser.add_argument('--max-chambers', dest='max_chambers', default=None)
    parser.add_argument('--max-group-order', dest='max_group_order',
                        default=None)
    parser.add_argument('--max-hyperplanes', dest='max_hyperplanes',
                        default=None)
    parser.add_argument('--slow', action='store_true', default=False,
                        help="Also run presets flagged as slow")
    parser.add_argument('--reduced', action='store_true', default=False,
                        help="Try bases from restricted roots first")
    parser.add_argument('--list', action='store_true', default=False,
                        help="List chambers with their witnesses")
    options = parser.parse_args(argv)
    cli_utils.setup_logging(cli_utils.parse_arg(options, 'log_level'))
    try:
        overrides = {name: _as_int(name, cli_utils.parse_arg(options, name))
                     for name in ('threads', 'max_chambers',
                                  'max_group_order', 'max_hyperplanes')}
        guards = generic_utils.get_guards(
            cli_utils.parse_arg(options, 'config'), overrides)
    except regions_exceptions.InputError as e:
        logging.error(str(e))
        return EXIT_INPUT
    command = Command(options.verb, options.source, {
        'base': options.base,
        'format': options.format,
        'output': options.output,
        'corpus': cli_utils.parse_arg(options, 'corpus'),
        'slow': options.slow,
        'reduced': options.reduced,
        'list': options.list,
        'guards': guards,
    })
    return run(command)


if __name__ == "__main__":
    sys.exit(run_from_cli())

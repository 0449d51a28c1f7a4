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

import io

import mock

import unit_tests.utils as ut_utils
import regions.coxeter.commands as commands
import regions.coxeter.utilities.exceptions as regions_exceptions
import regions.coxeter.utilities.generic as generic_utils
from regions.coxeter.arrangements import arrangement as arrangement_module
from regions.coxeter.restrictions import dpk
from regions.coxeter.restrictions import theorem

A2_ZETA = '1 + 2t + 2t^2 + t^3'


class TestResolveSource(ut_utils.BaseTestCase):

    def test_root_system(self):
        source = commands.resolve_source('B3')
        self.assertEqual(len(source.arrangement), 9)
        self.assertEqual(source.root_system.label, 'B3')
        self.assertIsNone(source.preset)

    def test_dpk(self):
        source = commands.resolve_source('D:4:1')
        self.assertEqual(source.params, dpk.DpkParams(4, 1))
        self.assertEqual(len(source.arrangement), 13)

    def test_presets(self):
        source = commands.resolve_source('A4/A1')
        self.assertEqual(source.preset.name, 'A4/A1')
        self.assertEqual(len(source.arrangement), 6)
        source = commands.resolve_source('D6/A2')
        self.assertEqual(source.preset.indices, (1, 2))

    def test_file(self):
        self.patch_object(commands.os.path, 'exists', return_value=True,
                          name='exists')
        self.patch_object(commands.arrangement_module, 'read_arrangement',
                          return_value='arrangement',
                          name='read_arrangement')
        source = commands.resolve_source('a.txt')
        self.read_arrangement.assert_called_once_with('a.txt')
        self.assertEqual(source.arrangement, 'arrangement')

    def test_errors(self):
        for name in (None, 'Q9', 'D:3', 'A3/B2'):
            with self.assertRaises(regions_exceptions.InputError):
                commands.resolve_source(name)


class TestRun(ut_utils.BaseTestCase):

    def _run(self, verb, source=None, **options):
        options.setdefault('guards', dict(generic_utils.DEFAULT_GUARDS))
        stream = io.StringIO()
        status = commands.run(commands.Command(verb, source, options),
                              stream)
        return status, stream.getvalue()

    def test_zeta(self):
        self.assertEqual(self._run('zeta', 'A2'),
                         (commands.EXIT_OK, A2_ZETA + '\n'))
        self.assertEqual(self._run('zeta', 'A2', base='-++'),
                         (commands.EXIT_OK, A2_ZETA + '\n'))
        self.assertEqual(
            self._run('zeta', 'A2', base='all'),
            (commands.EXIT_OK,
             '{}\nidentical for all 6 bases\n'.format(A2_ZETA)))

    def test_zeta_distinct(self):
        self.patch_object(
            commands.chambers_module, 'zeta_all_bases', name='zeta_all_bases',
            return_value=[ut_utils.poly(1, 1), ut_utils.poly(1, 2, 1),
                          ut_utils.poly(1, 1)])
        self.assertEqual(
            self._run('zeta', 'A2', base='all'),
            (commands.EXIT_OK, '1 + t\t2 bases\n1 + 2t + t^2\t1 bases\n'))

    def test_zeta_dpk_base(self):
        status, text = self._run('zeta', 'D:3:1')
        self.assertEqual(status, commands.EXIT_OK)
        self.assertEqual(
            text, '1 + 3t + 5t^2 + 7t^3 + 7t^4 + 5t^5 + 3t^6 + t^7\n')

    def test_zeta_needs_a_base(self):
        self.assertEqual(self._run('zeta', 'A3/A1')[0], commands.EXIT_INPUT)
        self.assertEqual(self._run('zeta', 'A2', base='+++-')[0],
                         commands.EXIT_INPUT)
        self.assertEqual(self._run('zeta', 'A2', base='++-')[0],
                         commands.EXIT_INPUT)

    def test_chambers(self):
        self.assertEqual(self._run('chambers', 'B3'),
                         (commands.EXIT_OK, 'chambers: 48\n'))
        status, text = self._run('chambers', 'A2', list=True)
        lines = text.splitlines()
        self.assertEqual(lines[0], 'chambers: 6')
        self.assertEqual(len(lines), 7)
        self.assertTrue(lines[1].startswith('+++ '))

    def test_exponents(self):
        self.assertEqual(self._run('exponents', 'B3'),
                         (commands.EXIT_OK, 'exponents: 1 3 5\n'))
        self.assertEqual(self._run('exponents', 'D:4:1'),
                         (commands.EXIT_OK, 'exponents: 1 3 4 5\n'))

    def test_check(self):
        status, text = self._run('check', 'A3/A1')
        self.assertEqual(status, commands.EXIT_OK)
        self.assertTrue(text.startswith('A3/A1\n'))
        self.assertIn('factors: yes', text)
        self.assertIn('expected: yes', text)
        status, text = self._run('check', 'D:4:1', format='rows')
        self.assertEqual(status, commands.EXIT_OK)
        lines = text.splitlines()
        self.assertEqual(lines[0].split('\t')[0], 'name')
        self.assertEqual(lines[1].split('\t')[:6],
                         ['D:4:1', '4', '13', '1,3,4,5', '240', 'yes'])

    def test_check_prints_sorted_exponents(self):
        status, text = self._run('check', 'D:4:0')
        self.assertEqual(status, commands.EXIT_OK)
        self.assertIn('factors: yes; exponents 1 3 3 5; witness found', text)

    def test_zero_denominator_in_file(self):
        self.patch_object(commands.os.path, 'exists', return_value=True,
                          name='exists')
        self.patch_object(
            commands.arrangement_module, 'read_arrangement',
            name='read_arrangement',
            side_effect=lambda path: arrangement_module.parse_arrangement(
                'dim 2 field Q\n1/0 1\n', path))
        self.assertEqual(self._run('chambers', 'bad.txt'),
                         (commands.EXIT_INPUT, ''))

    def test_check_mismatch(self):
        report = theorem.FactorizationReport('A3/A1', expected=True)
        self.patch_object(commands.theorem, 'check_preset',
                          return_value=report, name='check_preset')
        status, text = self._run('check', 'A3/A1')
        self.assertEqual(status, commands.EXIT_MISMATCH)
        self.assertIn('factors: no', text)

    def test_failed_identity(self):
        self.patch_object(
            commands.theorem, 'search_factoring_base', name='search',
            side_effect=regions_exceptions.IdentityCheckFailed('broken'))
        self.assertEqual(self._run('check', 'A2'),
                         (commands.EXIT_MISMATCH, ''))

    def test_dpk(self):
        self.assertEqual(
            self._run('dpk', 'D:3:1'),
            (commands.EXIT_OK,
             'p\tk\thyperplanes\texponents\tzeta\twalls\n'
             '3\t1\t7\t1,3,3\tmatch\tmatch\n'))
        self.assertEqual(self._run('dpk', 'A2')[0], commands.EXIT_INPUT)

    def test_table(self):
        corpus = theorem.load_corpus()
        small = [theorem.get_preset(name, corpus)
                 for name in ('A3/A1', 'B3/A1', 'E8/A1')]
        self.patch_object(commands.theorem, 'load_corpus',
                          return_value=small, name='load_corpus')
        status, text = self._run('table', format='rows', corpus='c.yaml')
        self.load_corpus.assert_called_once_with('c.yaml')
        self.assertEqual(status, commands.EXIT_OK)
        verdicts = [line.split('\t')[5] for line in text.splitlines()[1:]]
        self.assertEqual(verdicts, ['yes', 'yes', 'skipped'])

    def test_table_mismatch(self):
        self.patch_object(commands.theorem, 'load_corpus', return_value=[],
                          name='load_corpus')
        self.patch_object(
            commands.theorem, 'theorem_table', name='theorem_table',
            return_value=[theorem.FactorizationReport(
                'E8/A2A3', found=True, expected=False)])
        status, text = self._run('table', slow=True)
        self.assertEqual(status, commands.EXIT_MISMATCH)
        self.theorem_table.assert_called_once_with(
            [], mock.ANY, mock.ANY, strict=False, include_slow=True,
            reduced=False)
        self.assertIn('E8/A2A3', text)

    def test_guard_breach(self):
        guards = dict(generic_utils.DEFAULT_GUARDS, max_chambers=5)
        self.assertEqual(self._run('chambers', 'A3', guards=guards),
                         (commands.EXIT_GUARD, ''))
        guards = dict(generic_utils.DEFAULT_GUARDS, max_lattice_rank=2)
        self.assertEqual(self._run('exponents', 'A3', guards=guards)[0],
                         commands.EXIT_GUARD)

    def test_restrict(self):
        self.assertEqual(self._run('restrict', 'A4/A1')[0],
                         commands.EXIT_INPUT)
        self.patch_object(commands.arrangement_module, 'write_arrangement',
                          name='write_arrangement')
        self.assertEqual(self._run('restrict', 'A4/A1', output='a.txt'),
                         (commands.EXIT_OK, ''))
        arrangement, path = self.write_arrangement.call_args[0]
        self.assertEqual(len(arrangement), 6)
        self.assertEqual(path, 'a.txt')

    def test_output_file(self):
        with ut_utils.patch_open() as (_open, _file):
            self.assertEqual(self._run('zeta', 'A2', output='zeta.txt'),
                             (commands.EXIT_OK, ''))
            _open.assert_called_once_with('zeta.txt', 'w')
            _file.write.assert_called_once_with(A2_ZETA + '\n')

    def test_presets(self):
        presets = [
            theorem.RestrictionPreset('A3/A1', 'A3', 'A1', indices=[1],
                                      expected=True),
            theorem.RestrictionPreset('E8/A1', 'E8', 'A1', indices=[1],
                                      expected=False, skip='too big'),
            theorem.RestrictionPreset('E7/A4', 'E7', 'A4', indices=[3],
                                      slow=True),
        ]
        self.patch_object(commands.theorem, 'load_corpus',
                          return_value=presets, name='load_corpus')
        self.assertEqual(
            self._run('presets'),
            (commands.EXIT_OK,
             'A3/A1\tyes\t-\nE8/A1\tno\tskip: too big\nE7/A4\t-\tslow\n'))

    def test_unknown_verb(self):
        self.assertEqual(self._run('draw', 'A2'), (commands.EXIT_INPUT, ''))

    def test_default_guards(self):
        self.patch_object(commands.generic_utils, 'get_guards',
                          return_value=dict(generic_utils.DEFAULT_GUARDS),
                          name='get_guards')
        stream = io.StringIO()
        status = commands.run(commands.Command('exponents', 'A2', None),
                              stream)
        self.assertEqual(status, commands.EXIT_OK)
        self.get_guards.assert_called_once_with()
        self.assertEqual(stream.getvalue(), 'exponents: 1 2\n')


class TestRunFromCli(ut_utils.BaseTestCase):

    def setUp(self):
        super(TestRunFromCli, self).setUp()
        self.patch_object(commands.cli_utils, 'setup_logging',
                          name='setup_logging')
        self.patch_object(commands, 'run', return_value=0, name='run')
        self.patch_object(commands.generic_utils, 'get_guards',
                          return_value={'threads': 2}, name='get_guards')
        self.patch('os.environ', new={}, name='environ')

    def test_arguments(self):
        status = commands.run_from_cli(
            ['zeta', 'A2', '--base', 'all', '--threads', '2',
             '--max-chambers', '100', '--log-level', 'DEBUG'])
        self.assertEqual(status, 0)
        self.setup_logging.assert_called_once_with('DEBUG')
        self.get_guards.assert_called_once_with(None, {
            'threads': 2, 'max_chambers': 100, 'max_group_order': None,
            'max_hyperplanes': None})
        command = self.run.call_args[0][0]
        self.assertEqual((command.verb, command.source), ('zeta', 'A2'))
        self.assertEqual(command.options['base'], 'all')
        self.assertEqual(command.options['guards'], {'threads': 2})
        self.assertFalse(command.options['slow'])

    def test_flags(self):
        commands.run_from_cli(['table', '--slow', '--reduced', '--format',
                               'rows', '-o', 'table.txt', '--config',
                               'regions.yaml'])
        self.get_guards.assert_called_once_with('regions.yaml', mock.ANY)
        options = self.run.call_args[0][0].options
        self.assertTrue(options['slow'])
        self.assertTrue(options['reduced'])
        self.assertEqual(options['format'], 'rows')
        self.assertEqual(options['output'], 'table.txt')

    def test_bad_integer(self):
        self.assertEqual(commands.run_from_cli(['chambers', 'A2',
                                                '--threads', 'many']),
                         commands.EXIT_INPUT)
        self.assertFalse(self.run.called)

    def test_environment_wins(self):
        commands.os.environ['REGIONS_THREADS'] = '3'
        commands.run_from_cli(['chambers', 'A2', '--threads', '2'])
        self.assertEqual(self.get_guards.call_args[0][1]['threads'], 3)

    def test_bad_verb(self):
        with self.assertRaises(SystemExit):
            commands.run_from_cli(['draw', 'A2'])

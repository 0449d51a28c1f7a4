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

"""Factorization verdicts for restrictions of Coxeter arrangements.

A restriction is named ``W/T``: the reflection arrangement of ``W``
restricted to the fixed space of a parabolic subgroup of type ``T``. The
question is whether some base chamber makes the rank generating function
equal ``(1 + ... + t^e_1) ... (1 + ... + t^e_n)`` for the exponents of the
restriction.
"""

import collections
import itertools
import logging
import os

import regions.coxeter.utilities.exceptions as regions_exceptions
import regions.coxeter.utilities.generic as generic_utils
import regions.coxeter.utilities.linalg as linalg
from regions.coxeter.arrangements import arrangement as arrangement_module
from regions.coxeter.arrangements import chambers as chambers_module
from regions.coxeter.arrangements import roots as roots_module
from regions.coxeter.utilities.poly import (
    f_product,
    factors_as,
    value_at_one,
)
from regions.coxeter.utilities.scalar import ONE, ZERO, Vector

CORPUS_FILE = os.path.join(os.path.dirname(__file__), 'presets.yaml')

CHUNK_SIZE = 64

MODE_EXHAUSTIVE = 'exhaustive'
MODE_REDUCED = 'reduced'
MODE_FALLBACK = 'reduced+exhaustive'

Restriction = collections.namedtuple(
    'Restriction',
    ['root_system', 'arrangement', 'flat', 'restricted', 'indices'])

LocalizationRow = collections.namedtuple(
    'LocalizationRow', ['indices', 'type', 'zeta', 'expected', 'match'])


class RestrictionPreset:
    """One named restriction ``W/T`` of the corpus."""

    def __init__(self, name, ambient, type, indices=None, roots=None,
                 expected=None, source=None, hyperplanes=None, exponents=None,
                 note=None, skip=None, slow=False):
        """Create a preset.

        :param name: Name such as ``E7/(A1A3)''``
        :type name: str
        :param ambient: Type of W
        :type ambient: str
        :param type: Declared type T of the parabolic
        :type type: str
        :param indices: 1-based simple root indices J0
        :type indices: Optional[List[int]]
        :param roots: Positive roots spanning the parabolic, as coordinate
                      lines, used when ``indices`` is not given
        :type roots: Optional[List[str]]
        :param expected: Whether the restriction should factor
        :type expected: Optional[bool]
        :param source: Where the expected verdict comes from
        :type source: Optional[str]
        :param hyperplanes: Expected number of hyperplanes
        :type hyperplanes: Optional[int]
        :param exponents: Expected nonzero exponents of the restriction
        :type exponents: Optional[List[int]]
        :param note: Free text
        :type note: Optional[str]
        :param skip: Reason why the row is not run
        :type skip: Optional[str]
        :param slow: Row is only run on request
        :type slow: bool
        """
        if (indices is None) == (roots is None):
            raise regions_exceptions.InputError(
                "Preset {} needs exactly one of indices and roots"
                .format(name))
        self.name = name
        self.ambient = ambient
        self.type = type
        self.indices = tuple(indices) if indices is not None else None
        self.roots = tuple(roots) if roots is not None else None
        self.expected = expected
        self.source = source
        self.hyperplanes = hyperplanes
        self.exponents = (tuple(sorted(exponents)) if exponents is not None
                          else None)
        self.note = note
        self.skip = skip
        self.slow = bool(slow)

    def __repr__(self):
        """Return a readable representation."""
        return "RestrictionPreset('{}')".format(self.name)

    @property
    def zero_based(self):
        """Simple root indices counted from zero."""
        if self.indices is None:
            return None
        return tuple(sorted(i - 1 for i in self.indices))


_PRESET_KEYS = ('name', 'ambient', 'type', 'indices', 'roots', 'expected',
                'source', 'hyperplanes', 'exponents', 'note', 'skip',
                'slow')


def load_corpus(path=None):
    """Load presets from a YAML corpus file.

    :param path: Corpus file; the corpus shipped with the package if unset
    :type path: Optional[str]
    :returns: Presets in file order
    :rtype: List[RestrictionPreset]
    :raises: regions_exceptions.ParseError
    """
    path = path or CORPUS_FILE
    config = generic_utils.get_yaml_config(path)
    rows = config.get('presets') if isinstance(config, dict) else None
    if not isinstance(rows, list):
        raise regions_exceptions.ParseError(
            "expected a 'presets' list", source=path)
    corpus = []
    seen = set()
    for row in rows:
        if not isinstance(row, dict) or not row.get('name'):
            raise regions_exceptions.ParseError(
                "every preset needs a name", source=path)
        unknown = sorted(set(row) - set(_PRESET_KEYS))
        if unknown:
            raise regions_exceptions.ParseError(
                "preset {} has unknown keys: {}".format(
                    row['name'], ', '.join(unknown)), source=path)
        if row['name'] in seen:
            raise regions_exceptions.ParseError(
                "duplicate preset {}".format(row['name']), source=path)
        seen.add(row['name'])
        if 'ambient' not in row or 'type' not in row:
            ambient, _, type_label = str(row['name']).partition('/')
            row.setdefault('ambient', ambient)
            row.setdefault('type', type_label)
        corpus.append(RestrictionPreset(**row))
    logging.debug("Loaded {} presets from {}".format(len(corpus), path))
    return corpus


def get_preset(name, corpus=None):
    """Return the preset called ``name``.

    :raises: regions_exceptions.UnknownPreset
    """
    for preset in corpus if corpus is not None else load_corpus():
        if preset.name == name:
            return preset
    raise regions_exceptions.UnknownPreset(
        "No preset named {}".format(name))


def preset_from_label(label):
    """Build a preset for ``W/T`` from the first simple subset of type T.

    :param label: Label such as ``D5/A2``
    :type label: str
    :rtype: RestrictionPreset
    :raises: regions_exceptions.UnknownPreset
    """
    ambient, _, type_label = label.partition('/')
    rs = roots_module.root_system(ambient)
    subsets = roots_module.simple_subsets_of_type(rs, type_label)
    if not subsets:
        raise regions_exceptions.UnknownPreset(
            "{} has no simple roots of type {}".format(ambient, type_label))
    return RestrictionPreset(label, ambient, type_label,
                             indices=[i + 1 for i in subsets[0]])


def _wall_roots(arrangement, rs):
    """Return the normals bounding the chamber holding the dominant point."""
    point = rs.dominant_point()
    mask = chambers_module.signs_of_point(arrangement, point)
    chamber = chambers_module.Chamber(mask, point)
    bounding = chambers_module.walls(arrangement, chamber)
    return [-n if chamber.sign(i) < 0 else n
            for i, n in enumerate(arrangement.normals) if i in bounding]


def _check_type(preset, rs, arrangement, flat):
    declared = roots_module.parse_type(preset.type)
    if preset.indices is not None:
        found = roots_module.type_of_subset(rs, preset.zero_based)
    else:
        local = arrangement_module.localize(arrangement, flat)
        found = roots_module.RootSystem(
            _wall_roots(local, rs), field=rs.field).components
    if found != declared:
        raise regions_exceptions.PresetTypeMismatch(
            preset.name, roots_module.format_type(declared),
            roots_module.format_type(found))


def build_restriction(preset):
    """Build the restriction of a preset with everything derived on the way.

    :param preset: Preset
    :type preset: RestrictionPreset
    :rtype: Restriction
    :raises: regions_exceptions.PresetTypeMismatch
    """
    rs = roots_module.root_system(preset.ambient)
    arrangement = roots_module.coxeter_arrangement(rs)
    if preset.indices is not None:
        if any(not 1 <= i <= rs.rank for i in preset.indices):
            raise regions_exceptions.InvalidParams(
                "Preset {}: simple root indices must lie in 1..{}".format(
                    preset.name, rs.rank))
        vectors = [rs.simple_roots[i] for i in preset.zero_based]
    else:
        vectors = [Vector.parse(line, field=rs.field)
                   for line in preset.roots]
    flat = arrangement.flat_spanned(vectors)
    _check_type(preset, rs, arrangement, flat)
    restricted = arrangement_module.restrict(arrangement, flat)
    logging.info("{}: {} hyperplanes in dimension {}".format(
        preset.name, len(restricted), restricted.dim))
    return Restriction(rs, arrangement, flat, restricted, preset.zero_based)


def restriction_by_name(preset):
    """Return the restricted arrangement of a preset or preset name.

    :param preset: Preset, corpus name or ``W/T`` label
    :type preset: Union[RestrictionPreset, str]
    :rtype: Arrangement
    :raises: regions_exceptions.PresetTypeMismatch
    """
    if isinstance(preset, str):
        preset = get_preset(preset)
    return build_restriction(preset).restricted


class FactorizationReport:
    """Outcome of a base search on one arrangement."""

    def __init__(self, name, rank=None, hyperplanes=None, exponents=(),
                 chambers=None, found=False, witness=None,
                 witness_position=None, zeta=None, distinct_zetas=(),
                 mode=MODE_EXHAUSTIVE, bases_checked=0, nanoseconds=0,
                 expected=None, skipped=None, note=None):
        """Create a report; see :func:`search_factoring_base`."""
        self.name = name
        self.rank = rank
        self.hyperplanes = hyperplanes
        self.exponents = tuple(exponents)
        self.chambers = chambers
        self.found = found
        self.witness = witness
        self.witness_position = witness_position
        self.zeta = zeta
        self.distinct_zetas = list(distinct_zetas)
        self.mode = mode
        self.bases_checked = bases_checked
        self.nanoseconds = nanoseconds
        self.expected = expected
        self.skipped = skipped
        self.note = note

    def __repr__(self):
        """Return a readable representation."""
        return "FactorizationReport('{}', verdict={})".format(
            self.name, self.verdict)

    @property
    def verdict(self):
        """``yes``, ``no`` or ``skipped``."""
        if self.skipped:
            return 'skipped'
        return 'yes' if self.found else 'no'

    @property
    def matches(self):
        """Whether the verdict agrees with the expected one, if any."""
        if self.skipped or self.expected is None:
            return True
        return self.found == self.expected

    @property
    def seconds(self):
        """Elapsed time as a fixed three place decimal string."""
        return generic_utils.format_seconds(self.nanoseconds)


def _zeta_chunk(chamber_set, chunk):
    return [(position, chambers_module.zeta_of_mask(
        chamber_set, chamber_set[position].signs)) for position in chunk]


def _scan(chamber_set, positions, exponents, executor, threads):
    """Scan bases in batches; stop after the first batch with a witness.

    :returns: Witness position or None, distinct zetas, bases checked
    """
    distinct = set()
    batch_size = CHUNK_SIZE * max(1, threads)
    for start in range(0, len(positions), batch_size):
        batch = positions[start:start + batch_size]
        pieces = generic_utils.map_in_order(
            executor,
            lambda chunk: _zeta_chunk(chamber_set, chunk),
            generic_utils.chunked(batch, CHUNK_SIZE))
        hits = []
        for position, poly in (pair for piece in pieces for pair in piece):
            distinct.add(poly)
            if factors_as(poly, exponents):
                hits.append(position)
        logging.debug("Checked bases {}..{}: {} witnesses".format(
            start, start + len(batch) - 1, len(hits)))
        if hits:
            witness = min(hits)
            return witness, distinct, positions.index(witness) + 1
    return None, distinct, len(positions)


def _representatives(chamber_set, candidates):
    if candidates is None:
        return chamber_set.antipodal_representatives()
    positions = set()
    for chamber in candidates:
        position = chamber_set.index_of(chamber.signs)
        positions.add(min(position, chamber_set.antipode(position)))
    return sorted(positions)


def search_factoring_base(arrangement, guards=None, executor=None,
                          candidates=None, fallback=True, name=None,
                          chambers=None, exponents=None):
    """Search for a base chamber whose zeta factors by the exponents.

    Bases are visited one per antipodal pair in canonical order. The
    reported witness is the first one in that order.

    :param arrangement: Arrangement to test
    :type arrangement: Arrangement
    :param guards: Guard values
    :type guards: Optional[Dict[str, int]]
    :param executor: Executor for the per-base zeta computations
    :type executor: Optional[futurist.Executor]
    :param candidates: Restrict the search to these chambers first
    :type candidates: Optional[List[Chamber]]
    :param fallback: Search every base when the candidates give no witness
    :type fallback: bool
    :param name: Name used in the report
    :type name: Optional[str]
    :param chambers: Chambers of ``arrangement``, enumerated if omitted
    :type chambers: Optional[ChamberSet]
    :param exponents: Known exponents; computed from the lattice if omitted
    :type exponents: Optional[Iterable[int]]
    :rtype: FactorizationReport
    :raises: regions_exceptions.IdentityCheckFailed when the chamber count
             differs from the product of (e + 1)
    """
    started = generic_utils.clock_ns()
    name = name or 'arrangement'
    if exponents is None:
        exponents = arrangement_module.exponents(arrangement, guards).values
    exponents = tuple(e for e in exponents if e)
    own_executor = executor is None
    threads = generic_utils.guard_value(guards, 'threads')
    if own_executor:
        executor = generic_utils.get_executor(threads)
    try:
        if chambers is None:
            chambers = chambers_module.enumerate_chambers(
                arrangement, guards, executor)
        if len(chambers) != value_at_one(exponents):
            raise regions_exceptions.IdentityCheckFailed(
                "{}: {} chambers but exponents {} predict {}".format(
                    name, len(chambers), exponents,
                    value_at_one(exponents)))
        mode = MODE_EXHAUSTIVE if candidates is None else MODE_REDUCED
        positions = _representatives(chambers, candidates)
        logging.info("{}: checking {} bases ({})".format(
            name, len(positions), mode))
        witness, distinct, checked = _scan(
            chambers, positions, exponents, executor, threads)
        if witness is None and candidates is not None and fallback:
            mode = MODE_FALLBACK
            positions = chambers.antipodal_representatives()
            logging.info("{}: no witness among candidates, checking all {} "
                         "bases".format(name, len(positions)))
            witness, more, extra = _scan(
                chambers, positions, exponents, executor, threads)
            distinct |= more
            checked += extra
    finally:
        if own_executor:
            executor.shutdown()
    report = FactorizationReport(
        name, rank=arrangement.rank, hyperplanes=len(arrangement),
        exponents=exponents, chambers=len(chambers),
        found=witness is not None, mode=mode, bases_checked=checked,
        nanoseconds=generic_utils.clock_ns() - started)
    if witness is not None:
        report.witness = chambers.sign_string(witness)
        report.witness_position = witness
        report.zeta = chambers_module.zeta_of_mask(
            chambers, chambers[witness].signs)
    else:
        report.distinct_zetas = sorted(
            distinct, key=lambda p: p.coefficients)
    logging.info("{}: factors {} after {} bases".format(
        name, report.verdict, checked))
    return report


def orbit_transporters(rs, indices, targets=None, guards=None):
    """Find words carrying the simple roots J0 onto other simple subsets.

    The W-orbit of the set of roots ``{a_j : j in J0}`` is searched breadth
    first under left multiplication by simple reflections.

    :param rs: Root system
    :type rs: RootSystem
    :param indices: 0-based simple root indices J0
    :type indices: Iterable[int]
    :param targets: Simple subsets to reach, all of the type of J0 if unset
    :type targets: Optional[Iterable[Tuple[int, ...]]]
    :param guards: Guard values
    :type guards: Optional[Dict[str, int]]
    :returns: For each reachable target the reflections ``(i_1, ..., i_m)``
              with ``s_i_m ... s_i_1`` mapping J0 onto it
    :rtype: Dict[Tuple[int, ...], Tuple[int, ...]]
    :raises: regions_exceptions.GroupTooLarge
    """
    roots_module.check_group_order(
        rs, generic_utils.guard_value(guards, 'max_group_order'))
    start = tuple(sorted(indices))
    if targets is None:
        targets = roots_module.simple_subsets_of_type(
            rs, roots_module.type_of_subset(rs, start))
    wanted = {tuple(sorted(t)) for t in targets}
    tables = rs.simple_reflection_tables
    parents = {start: None}
    queue = collections.deque([start])
    found = {}
    if start in wanted:
        found[start] = ()
    while queue and len(found) < len(wanted):
        state = queue.popleft()
        for i, table in enumerate(tables):
            image = tuple(sorted(table[k] for k in state))
            if image in parents:
                continue
            parents[image] = (state, i)
            queue.append(image)
            if image in wanted:
                word = []
                node = image
                while parents[node] is not None:
                    node, step = parents[node]
                    word.append(step)
                found[image] = tuple(reversed(word))
    logging.debug("Orbit search from {} visited {} sets, reached {} of {} "
                  "targets".format(start, len(parents), len(found),
                                   len(wanted)))
    return found


def _face_point(rs, indices):
    """Return the point with <a_j, p> = 0 on ``indices`` and 1 elsewhere."""
    rhs = [ZERO if j in indices else ONE for j in range(rs.rank)]
    coefficients = linalg.solve(rs.gram, rhs)
    point = Vector([ZERO] * rs.dim, field=rs.field)
    for c, root in zip(coefficients, rs.simple_roots):
        point = point + root.scale(c)
    return point


def candidate_bases_via_restricted_roots(rs, indices, restriction=None,
                                         chambers=None, guards=None):
    """Return base chambers of the restriction, one per reachable subset.

    For every simple subset J' in the orbit of J0 a word w with
    w(J0) = J' is found; the face of the dominant chamber of type J' is
    carried back into X by w^-1 and the chamber of the restriction holding
    it is returned.

    :param rs: Root system
    :type rs: RootSystem
    :param indices: 0-based simple root indices J0
    :type indices: Iterable[int]
    :param restriction: Restriction built from ``rs`` and ``indices``
    :type restriction: Optional[Restriction]
    :param chambers: Chambers of the restricted arrangement
    :type chambers: Optional[ChamberSet]
    :rtype: List[Chamber]
    :raises: regions_exceptions.GroupTooLarge,
             regions_exceptions.BaseNotAChamber
    """
    indices = tuple(sorted(indices))
    roots_module.check_group_order(
        rs, generic_utils.guard_value(guards, 'max_group_order'))
    if restriction is None:
        arrangement = roots_module.coxeter_arrangement(rs)
        flat = arrangement.flat_spanned(
            [rs.simple_roots[j] for j in indices])
        restriction = Restriction(
            rs, arrangement, flat,
            arrangement_module.restrict(arrangement, flat), indices)
    if chambers is None:
        chambers = chambers_module.enumerate_chambers(
            restriction.restricted, guards)
    basis = arrangement_module.restriction_basis(restriction.flat)
    transporters = orbit_transporters(rs, indices, guards=guards)
    found = {}
    for target, word in sorted(transporters.items()):
        point = _face_point(rs, target)
        for i in reversed(word):
            point = rs.reflect(point, i)
        if any(point.dot(rs.simple_roots[j]) for j in indices):
            raise regions_exceptions.IdentityCheckFailed(
                "transported point for {} left the flat".format(target))
        coordinates = linalg.coordinates(basis, point)
        position = chambers_module.locate_chamber(chambers, coordinates)
        found.setdefault(position, chambers[position])
    candidates = [found[position] for position in sorted(found)]
    logging.info("{} subsets in the orbit of {} give {} candidate bases"
                 .format(len(transporters), indices, len(candidates)))
    return candidates


def cross_check(preset, guards=None, executor=None):
    """Compare the reduced and the exhaustive base search on a preset.

    :returns: Reduced and exhaustive reports
    :rtype: Tuple[FactorizationReport, FactorizationReport]
    :raises: regions_exceptions.IdentityCheckFailed when verdicts differ
    """
    if preset.indices is None:
        raise regions_exceptions.InvalidParams(
            "Preset {} is not given by simple roots".format(preset.name))
    restriction = build_restriction(preset)
    chamber_set = chambers_module.enumerate_chambers(
        restriction.restricted, guards, executor)
    exponents = arrangement_module.exponents(
        restriction.restricted, guards).values
    candidates = candidate_bases_via_restricted_roots(
        restriction.root_system, restriction.indices, restriction,
        chamber_set, guards)
    reduced = search_factoring_base(
        restriction.restricted, guards, executor, candidates=candidates,
        fallback=False, name=preset.name, chambers=chamber_set,
        exponents=exponents)
    full = search_factoring_base(
        restriction.restricted, guards, executor, name=preset.name,
        chambers=chamber_set, exponents=exponents)
    if reduced.found != full.found:
        raise regions_exceptions.IdentityCheckFailed(
            "{}: reduced search says {}, exhaustive search says {}".format(
                preset.name, reduced.verdict, full.verdict))
    return reduced, full


def check_preset(preset, guards=None, executor=None, reduced=False):
    """Run the base search on one preset.

    :param reduced: Try candidate bases from the restricted roots first
    :type reduced: bool
    :rtype: FactorizationReport
    """
    restriction = build_restriction(preset)
    arrangement = restriction.restricted
    if preset.hyperplanes is not None and \
            len(arrangement) != preset.hyperplanes:
        raise regions_exceptions.IdentityCheckFailed(
            "{}: {} hyperplanes, expected {}".format(
                preset.name, len(arrangement), preset.hyperplanes))
    exponents = None
    if preset.exponents is not None:
        exponents = arrangement_module.exponents(arrangement, guards).values
        if tuple(sorted(exponents)) != preset.exponents:
            raise regions_exceptions.IdentityCheckFailed(
                "{}: exponents {}, expected {}".format(
                    preset.name, list(exponents), list(preset.exponents)))
    chamber_set = None
    candidates = None
    if reduced and preset.indices is not None:
        chamber_set = chambers_module.enumerate_chambers(
            arrangement, guards, executor)
        candidates = candidate_bases_via_restricted_roots(
            restriction.root_system, restriction.indices, restriction,
            chamber_set, guards)
    report = search_factoring_base(
        arrangement, guards, executor, candidates=candidates,
        name=preset.name, chambers=chamber_set,
        exponents=exponents)
    report.expected = preset.expected
    report.note = preset.note
    return report


def theorem_table(corpus=None, guards=None, executor=None, strict=True,
                  include_slow=False, reduced=False):
    """Run every preset of a corpus and compare verdicts.

    :param corpus: Presets, the shipped corpus if unset
    :type corpus: Optional[List[RestrictionPreset]]
    :param strict: Raise when a verdict differs from the expected one
    :type strict: bool
    :param include_slow: Also run rows flagged as slow
    :type include_slow: bool
    :param reduced: Use the reduced base search where possible
    :type reduced: bool
    :returns: One report per preset
    :rtype: List[FactorizationReport]
    :raises: regions_exceptions.VerdictMismatch
    """
    if corpus is None:
        corpus = load_corpus()
    reports = []
    for preset in corpus:
        reason = preset.skip
        if reason is None and preset.slow and not include_slow:
            reason = 'slow'
        if reason:
            logging.warning("Skipping {}: {}".format(preset.name, reason))
            reports.append(FactorizationReport(
                preset.name, expected=preset.expected, skipped=reason,
                note=preset.note))
            continue
        reports.append(check_preset(preset, guards, executor, reduced))
    mismatches = [r for r in reports if not r.matches]
    for report in mismatches:
        logging.error("{}: verdict {}, expected {}".format(
            report.name, report.verdict,
            'yes' if report.expected else 'no'))
    if strict and mismatches:
        raise regions_exceptions.VerdictMismatch(mismatches)
    return reports


def localization_report(rs, guards=None):
    """Compare zeta of every standard parabolic localization with Solomon.

    The base is the chamber of the localization holding the dominant
    chamber; the expected value is the product over the exponents of the
    parabolic subgroup.

    :rtype: List[LocalizationRow]
    """
    arrangement = roots_module.coxeter_arrangement(rs)
    point = rs.dominant_point()
    rows = []
    for size in range(1, rs.rank + 1):
        for subset in itertools.combinations(range(rs.rank), size):
            flat = arrangement.flat_spanned(
                [rs.simple_roots[j] for j in subset])
            local = arrangement_module.localize(arrangement, flat)
            chamber_set = chambers_module.enumerate_chambers(local, guards)
            base = chambers_module.locate_chamber(chamber_set, point)
            value = chambers_module.zeta(local, base, chamber_set)
            components = roots_module.type_of_subset(rs, subset)
            expected = f_product(roots_module.exponents_of_type(components))
            rows.append(LocalizationRow(
                tuple(j + 1 for j in subset),
                roots_module.format_type(components), value, expected,
                value == expected))
    logging.info("{}: {} of {} localizations match".format(
        rs.label, sum(1 for r in rows if r.match), len(rows)))
    return rows


def format_report(report):
    """Render one report as text."""
    return generic_utils.render_template(
        'factorization_report.j2', {'report': report})


def format_rows(reports):
    """Render reports as tab separated rows with a header."""
    return generic_utils.render_template(
        'report_rows.j2', {'reports': reports})

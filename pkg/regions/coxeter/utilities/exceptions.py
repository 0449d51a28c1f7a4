# Copyright 2018 Canonical Ltd.
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

"""Module of exceptions that regions.coxeter may raise."""


class RegionsError(Exception):
    """Base class of every error raised on purpose by the toolkit."""

    pass


class InputError(RegionsError):
    """The caller supplied something the toolkit cannot work with."""

    pass


class ZeroVector(InputError):
    """A zero vector was given where a hyperplane normal is required."""

    pass


class MixedField(InputError):
    """Vectors of one arrangement declare different scalar fields."""

    def __init__(self, fields):
        """Create MixedField exception.

        :param fields: The field tags that were found
        :type fields: Iterable[str]
        :returns: MixedField Exception
        """
        msg = ("Vectors of one arrangement must share a field, found: {}"
               .format(', '.join(sorted(set(fields)))))
        super(MixedField, self).__init__(msg)


class ParseError(InputError):
    """Text input could not be parsed."""

    def __init__(self, message, source=None, line=None):
        """Create ParseError exception.

        :param message: What went wrong
        :type message: str
        :param source: File name or other origin of the text
        :type source: Optional[str]
        :param line: 1-based line number
        :type line: Optional[int]
        :returns: ParseError Exception
        """
        location = ''
        if source is not None:
            location = '{}'.format(source)
        if line is not None:
            location = '{}:{}'.format(location, line)
        if location:
            message = '{}: {}'.format(location, message)
        self.source = source
        self.line = line
        super(ParseError, self).__init__(message)


class UnsupportedType(InputError):
    """Root system type or rank is not supported."""

    pass


class InvalidParams(InputError):
    """Parameters are outside the documented range."""

    pass


class CodeInvalid(InputError):
    """A region code is not an element of M_p^k."""

    pass


class FlatNotInLattice(InputError):
    """The flat does not belong to the intersection lattice."""

    pass


class BaseNotAChamber(InputError):
    """The base region is not a chamber of the arrangement."""

    pass


class PresetTypeMismatch(InputError):
    """Simple roots of a preset do not generate the declared type."""

    def __init__(self, name, declared, found):
        """Create PresetTypeMismatch exception.

        :param name: Preset name
        :type name: str
        :param declared: Type the preset declares
        :type declared: str
        :param found: Type recognised from the Coxeter graph
        :type found: str
        :returns: PresetTypeMismatch Exception
        """
        msg = ("Preset {} declares type {} but its roots generate {}"
               .format(name, declared, found))
        super(PresetTypeMismatch, self).__init__(msg)


class UnknownPreset(InputError):
    """No preset with the given name exists in the corpus."""

    pass


class GuardExceeded(RegionsError):
    """A size guard would be breached."""

    def __init__(self, guard, limit, size):
        """Create a guard exception.

        :param guard: Name of the guard, e.g. max_chambers
        :type guard: str
        :param limit: Configured limit
        :type limit: int
        :param size: Observed or estimated size
        :type size: int
        :returns: GuardExceeded Exception
        """
        self.guard = guard
        self.limit = limit
        self.size = size
        msg = ("Guard {} exceeded: {} > {}".format(guard, size, limit))
        super(GuardExceeded, self).__init__(msg)


class GroupTooLarge(GuardExceeded):
    """Coxeter group is too large to enumerate."""

    pass


class LatticeTooLarge(GuardExceeded):
    """Intersection lattice is too large to build."""

    pass


class TooManyChambers(GuardExceeded):
    """Arrangement has too many chambers or hyperplanes to enumerate."""

    pass


class TooManyCodes(GuardExceeded):
    """Too many region codes to sum over."""

    pass


class NotIntegerSplit(RegionsError):
    """Characteristic polynomial does not split over the integers."""

    pass


class IdentityCheckFailed(RegionsError):
    """A closed-form identity did not hold for computed values."""

    pass


class NoFrame(RegionsError):
    """No projective frame exists among the normals of an arrangement."""

    pass


class VerdictMismatch(RegionsError):
    """Computed factorization verdicts disagree with expected verdicts."""

    def __init__(self, reports):
        """Create VerdictMismatch exception.

        :param reports: Reports whose verdict differs from the expectation
        :type reports: List[FactorizationReport]
        :returns: VerdictMismatch Exception
        """
        self.reports = reports
        msg = ("Verdict mismatch for: {}"
               .format(', '.join(r.name for r in reports)))
        super(VerdictMismatch, self).__init__(msg)

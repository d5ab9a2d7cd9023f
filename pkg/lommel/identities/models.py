from dataclasses import dataclass
from enum import Enum
import math


class IdentityId(str, Enum):
    T1A = "T1a"
    T1A_PRIME = "T1a'"
    T1B = "T1b"
    T1B_PRIME = "T1b'"
    T1C = "T1c"
    T1C_PRIME = "T1c'"
    T2_8A = "T2_8a"
    T2_8B = "T2_8b"
    T2_9A = "T2_9a"
    T2_9B = "T2_9b"
    E10A = "E10a"
    E10B = "E10b"
    E11 = "E11"
    E12 = "E12"
    E13 = "E13"
    E14 = "E14"
    E15A = "E15a"
    E15B = "E15b"
    E16 = "E16"
    E17 = "E17"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text):
        """
        Accepts the ids as written, a trailing p for the prime (T1ap) and
        the unicode prime.
        """
        text = text.strip().replace('′', "'")
        if text.startswith('T1') and len(text) == 4 and text.endswith('p'):
            text = text[:-1] + "'"
        for member in cls:
            if member.value.lower() == text.lower():
                return member
        raise ValueError('unknown identity {!r}'.format(text))

    @property
    def suite(self):
        for name, members in SUITES.items():
            if self in members:
                return name
        raise KeyError(self)

    @property
    def primed(self):
        return self.value.endswith("'")


SUITES = {
    'theorem1': (IdentityId.T1A, IdentityId.T1A_PRIME, IdentityId.T1B, IdentityId.T1B_PRIME,
                 IdentityId.T1C, IdentityId.T1C_PRIME),
    'theorem2': (IdentityId.T2_8A, IdentityId.T2_8B, IdentityId.T2_9A, IdentityId.T2_9B,
                 IdentityId.E13, IdentityId.E14),
    'recurrences': (IdentityId.E10A, IdentityId.E10B, IdentityId.E11, IdentityId.E12,
                    IdentityId.E15A, IdentityId.E15B),
    'sums': (IdentityId.E16, IdentityId.E17),
}


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    UNRESOLVED = "unresolved"

    def __str__(self):
        return self.value


# columns of a report row that hold parameters, in order
PARAM_COLUMNS = ('a', 'b', 'n', 't', 'w', 'x', 'm', 'K')
CSV_HEADER = ('suite', 'variant') + PARAM_COLUMNS + (
    'lhs', 'rhs', 'abs_residual', 'rel_residual', 'lhs_err', 'rhs_err', 'wall_ms', 'verdict')


@dataclass(frozen=True)
class IdentityCase:
    identity_id: IdentityId
    # parameter name -> value; u is reported in the x column
    params: dict
    tolerance: float
    index: int = 0


def decide_verdict(abs_residual, tolerance, lhs_err, rhs_err):
    if not math.isfinite(abs_residual):
        return Verdict.UNRESOLVED
    if abs_residual <= max(tolerance, 3 * (lhs_err + rhs_err)):
        return Verdict.PASS
    return Verdict.FAIL


@dataclass
class ReportRecord:
    case: IdentityCase
    lhs: float = math.nan
    rhs: float = math.nan
    abs_residual: float = math.nan
    rel_residual: float = math.nan
    lhs_error_estimate: float = math.nan
    rhs_error_estimate: float = math.nan
    # seconds
    wall_time: float = 0.0
    verdict: Verdict = Verdict.UNRESOLVED
    # name of the matching form for identities with several candidates
    convention: str = ''
    notes: str = ''

    @classmethod
    def unresolved(cls, case, notes, wall_time=0.0):
        return cls(case, wall_time=wall_time, notes=notes)

    @property
    def identity_id(self):
        return self.case.identity_id

    def row(self, timings=False):
        """
        CSV row matching CSV_HEADER. wall_ms stays empty unless timings is
        set, so reruns write identical files.
        """
        params = dict(self.case.params)
        if 'u' in params:
            params['x'] = params.pop('u')
        values = [self.case.identity_id.suite, str(self.case.identity_id)]
        values += [_cell(params.get(name)) for name in PARAM_COLUMNS]
        values += [_cell(v) for v in (self.lhs, self.rhs, self.abs_residual, self.rel_residual,
                                      self.lhs_error_estimate, self.rhs_error_estimate)]
        values.append('{:.3f}'.format(self.wall_time * 1000) if timings else '')
        values.append(str(self.verdict))
        return values

    def to_dict(self, timings=False):
        return {
            'identity_id': str(self.case.identity_id),
            'suite': self.case.identity_id.suite,
            'params': dict(self.case.params),
            'tolerance': self.case.tolerance,
            'lhs': _json_number(self.lhs),
            'rhs': _json_number(self.rhs),
            'abs_residual': _json_number(self.abs_residual),
            'rel_residual': _json_number(self.rel_residual),
            'lhs_error_estimate': _json_number(self.lhs_error_estimate),
            'rhs_error_estimate': _json_number(self.rhs_error_estimate),
            'wall_ms': round(self.wall_time * 1000, 3) if timings else None,
            'verdict': str(self.verdict),
            'convention': self.convention,
            'notes': self.notes,
        }


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, float):
        return '' if math.isnan(value) else repr(float(value))
    return str(value)


def _json_number(value):
    return None if not math.isfinite(value) else value

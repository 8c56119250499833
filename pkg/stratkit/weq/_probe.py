"""Per-flag probes for weak equivalences of stratified simplicial sets."""

# License: MIT

import logging
from typing import List, NamedTuple, Optional

from joblib import Parallel, delayed

from ..diagrams import compare_map
from ..diagrams import levelwise_compare
from ..exceptions import MalformedInputError
from ..links import holink
from ..links import induced_holink_map
from ..links import induced_link_map
from ..poset import regular_flags
from ..simplicial import sd_map
from ..utils import Substitution
from ..utils import check_dim_bound
from ..utils import check_n_jobs
from ..utils._docstring import _budget_docstring
from ..utils._docstring import _n_jobs_docstring

logger = logging.getLogger(__name__)

REFUTED = "refuted"
PASSES = "passes-all-probes"
MODES = ("link", "holink")


class ProbeReport(NamedTuple):
    """Per-flag comparisons of a map and the aggregate verdict.

    Passing every probe is evidence, not a proof: agreement of components
    and homology is necessary for a weak equivalence but not sufficient.
    A refutation is exact and ``certificate`` names the first failing flag.

    Attributes
    ----------
    mode : str
        ``"link"``, ``"holink"`` or ``"diagram"``.

    max_deg : int

    levels : list of LevelComparison
        In flag order.

    truncation : int or None
        Dimension bound of the homotopy links in ``"holink"`` mode.
    """

    mode: str
    max_deg: int
    levels: List
    truncation: Optional[int] = None

    @property
    def verdict(self):
        return PASSES if all(level.passed for level in self.levels) else REFUTED

    @property
    def certificate(self):
        for level in self.levels:
            if not level.passed:
                return level.flag
        return None


def _link_level(f, I, sd_f, max_deg):
    return compare_map(I, induced_link_map(f, I, sd_f=sd_f), max_deg)


def _holink_level(f, I, max_deg, dim_bound, budget):
    source = holink(f.source, I, dim_bound, budget=budget, n_jobs=1)
    target = holink(f.target, I, dim_bound, budget=budget, n_jobs=1)
    return compare_map(I, induced_holink_map(f, source, target), max_deg)


@Substitution(budget=_budget_docstring, n_jobs=_n_jobs_docstring)
def probe(f, max_deg=1, use="link", dim_bound=None, budget=None, n_jobs=None):
    """Compare a stratified map on the links at every regular flag.

    For each regular flag ``I`` the map induced on ``Link_I`` (or on the
    truncated ``HoLink_I``) is checked for a bijection on components and
    for equal homology up to ``max_deg``. Links are the default since they
    are exact and small; they detect the same failures as the homotopy
    links.

    Parameters
    ----------
    f : StratifiedMap

    max_deg : int, default=1
        Highest homology degree compared.

    use : {{"link", "holink"}}, default="link"

    dim_bound : int, default=None
        Truncation of the homotopy links; ``max_deg + 1`` when ``None``.
        Ignored in link mode.

    {budget}

    {n_jobs}

    Returns
    -------
    report : ProbeReport

    Raises
    ------
    BudgetExceededError
        In holink mode, when a homotopy link needs more than ``budget``
        candidate expansions.

    Examples
    --------
    >>> from stratkit.poset import Poset
    >>> from stratkit.stratified import boundary
    >>> from stratkit.weq import probe
    >>> _, f = boundary(Poset([0, 1, 2], [(0, 1), (1, 2)]), (0, 1, 2))
    >>> report = probe(f)
    >>> report.verdict, report.certificate
    ('refuted', (0, 1, 2))
    """
    if use not in MODES:
        raise MalformedInputError(f"use has to be one of {MODES}. Got {use!r} instead.")
    if f.source.poset != f.target.poset:
        raise MalformedInputError("Both objects must be stratified over one poset.")
    max_deg = check_dim_bound(max_deg)
    flags = regular_flags(f.source.poset)
    parallel = Parallel(n_jobs=check_n_jobs(n_jobs), prefer="threads")
    if use == "link":
        sd_f = sd_map(f)
        truncation = None
        levels = parallel(delayed(_link_level)(f, I, sd_f, max_deg) for I in flags)
    else:
        truncation = max_deg + 1 if dim_bound is None else check_dim_bound(dim_bound)
        levels = parallel(
            delayed(_holink_level)(f, I, max_deg, truncation, budget) for I in flags
        )
    report = ProbeReport(use, max_deg, list(levels), truncation)
    logger.info(
        "Probe in %s mode: %s (certificate %s).",
        use,
        report.verdict,
        report.certificate,
    )
    return report


@Substitution(n_jobs=_n_jobs_docstring)
def probe_diagram(f, max_deg=1, n_jobs=None):
    """Compare a map of diagrams levelwise.

    Parameters
    ----------
    f : DiagramMap

    max_deg : int, default=1

    {n_jobs}

    Returns
    -------
    report : ProbeReport
        In ``"diagram"`` mode.
    """
    max_deg = check_dim_bound(max_deg)
    levels = levelwise_compare(f, max_deg, n_jobs=n_jobs)
    report = ProbeReport("diagram", max_deg, list(levels))
    logger.info("Diagram probe: %s.", report.verdict)
    return report

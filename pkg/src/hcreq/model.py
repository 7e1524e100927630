"""Core domain model for human-centered AI requirements projects.

A project is a typed requirements graph: one root goal, up to six area
sub-models, and for each area a set of elements (goals, needs, capabilities,
limitations, processes, trade-offs, decisions, attributes, users, data
sources), directed connectors between them, and recorded checklist answers.

All values are immutable after construction; editing means building a new
project value (see the ``with_*`` helpers).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterator, Mapping, Optional


class AreaKind(str, Enum):
    """The six requirement areas of the framework. Closed set."""

    USER_NEEDS = "user_needs"
    MODEL_NEEDS = "model_needs"
    DATA_NEEDS = "data_needs"
    FEEDBACK_CONTROL = "feedback_control"
    EXPLAINABILITY_TRUST = "explainability_trust"
    ERRORS_FAILURE = "errors_failure"

    @property
    def title(self) -> str:
        return _AREA_TITLES[self]


_AREA_TITLES = {
    AreaKind.USER_NEEDS: "User Needs",
    AreaKind.MODEL_NEEDS: "Model Needs",
    AreaKind.DATA_NEEDS: "Data Needs",
    AreaKind.FEEDBACK_CONTROL: "Feedback & User Control",
    AreaKind.EXPLAINABILITY_TRUST: "Explainability & Trust",
    AreaKind.ERRORS_FAILURE: "Errors & Failure",
}


class ElementKind(str, Enum):
    """Node types of the requirements graph, one per legend notation."""

    GOAL = "goal"
    NEED = "need"
    CAPABILITY = "capability"
    LIMITATION = "limitation"
    PROCESS = "process"
    TRADEOFF = "tradeoff"
    DECISION = "decision"
    ATTRIBUTE = "attribute"
    USER = "user"
    DATASOURCE = "datasource"


class Phase(str, Enum):
    """When a requirement could be pinned down.

    ``INITIAL`` marks items that can be specified before the model is
    tested against real data; ``LATER`` marks items that only firm up
    after testing. ``UNSPECIFIED`` means the author has not said, which
    the validator flags (W109).
    """

    INITIAL = "initial"
    LATER = "later"
    UNSPECIFIED = "unspecified"


class Audience(str, Enum):
    """Who a capability or limitation applies to."""

    END_USER = "user"
    STAKEHOLDER = "stakeholder"
    NONE = "none"


class ConnectorKind(str, Enum):
    """Edge types: plain data flow, or a flow that must be evaluated."""

    FLOW = "flow"
    EVALUATE = "evaluate"


# Decision topics and their closed value domains. A decision with a topic
# outside this table is kept as free text and downgraded to a warning by
# the validator (W111); a known topic with a value outside its domain is
# an error (E004).
DECISION_TOPICS: Mapping[str, tuple[str, ...]] = {
    "interaction": ("proactive", "reactive"),
    "visibility": ("visible", "invisible"),
    "approach": ("automation", "augmentation"),
    "reward": ("precision", "recall", "loss_function", "other"),
    "optimize_for": ("accuracy", "explainability", "other"),
    "ml_type": ("supervised", "unsupervised", "reinforcement"),
    "training": ("static", "dynamic"),
    "feedback_type": ("implicit", "explicit", "calibration"),
}

#: Well-known identifier of the project root goal in the DSL.
ROOT_GOAL_ID = "root"


class ModelError(ValueError):
    """A model value violates a structural invariant."""


class ElementNotFound(LookupError):
    """resolve() found no element with the requested id."""


@dataclass(frozen=True)
class SourceSpan:
    """Half-open location of a construct in a source file (1-based)."""

    file: str
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def __post_init__(self) -> None:
        if min(self.start_line, self.start_col, self.end_line, self.end_col) < 1:
            raise ModelError("span coordinates are 1-based positive integers")
        if (self.end_line, self.end_col) < (self.start_line, self.start_col):
            raise ModelError("span end precedes its start")

    @classmethod
    def synthetic(cls) -> "SourceSpan":
        """Span for values built in memory rather than parsed."""
        return cls("<memory>", 1, 1, 1, 1)


@dataclass(frozen=True)
class DecisionPayload:
    """The choice recorded by a decision element."""

    topic: str
    choice: str
    rationale: Optional[str] = None
    tradeoff_ref: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.topic:
            raise ModelError("decision topic must be nonempty")
        if not self.choice:
            raise ModelError("decision choice must be nonempty")

    @property
    def known_topic(self) -> bool:
        return self.topic in DECISION_TOPICS


@dataclass(frozen=True)
class Element:
    """One node of the requirements graph."""

    id: str
    kind: ElementKind
    label: str
    phase: Phase = Phase.UNSPECIFIED
    audience: Audience = Audience.NONE
    framework_marked: bool = False
    decision: Optional[DecisionPayload] = None
    notes: Optional[str] = None
    span: SourceSpan = field(default_factory=SourceSpan.synthetic)

    def __post_init__(self) -> None:
        if not self.id:
            raise ModelError("element id must be nonempty")
        if (self.kind is ElementKind.DECISION) != (self.decision is not None):
            raise ModelError(
                f"element {self.id!r}: decision payload is required exactly "
                "when kind is 'decision'"
            )


@dataclass(frozen=True)
class Connector:
    """Directed edge between two elements (or an element and the root goal)."""

    from_id: str
    to_id: str
    kind: ConnectorKind
    span: SourceSpan = field(default_factory=SourceSpan.synthetic)

    def __post_init__(self) -> None:
        if self.from_id == self.to_id:
            raise ModelError(f"connector endpoints must differ ({self.from_id!r})")


@dataclass(frozen=True)
class CatalogAnswer:
    """A recorded answer to one checklist item. ``value is None`` means N/A."""

    item_id: str
    value: Optional[str]
    phase: Phase = Phase.UNSPECIFIED
    span: SourceSpan = field(default_factory=SourceSpan.synthetic)

    def __post_init__(self) -> None:
        if not self.item_id:
            raise ModelError("answer item id must be nonempty")

    @property
    def is_na(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class AreaModel:
    """One area sub-model: its elements, connectors, and checklist answers."""

    kind: AreaKind
    elements: tuple[Element, ...] = ()
    connectors: tuple[Connector, ...] = ()
    answers: tuple[CatalogAnswer, ...] = ()


@dataclass(frozen=True)
class Project:
    """A whole requirements document."""

    name: str
    root_goal: Element
    areas: Mapping[AreaKind, AreaModel] = field(default_factory=dict)
    metadata: Mapping[str, str] = field(default_factory=dict)


def new_project(name: str, root_goal_label: str) -> Project:
    """Create a project containing only its root goal and no areas."""
    if not name:
        raise ModelError("project name must be nonempty")
    goal = Element(id=ROOT_GOAL_ID, kind=ElementKind.GOAL, label=root_goal_label)
    return Project(name=name, root_goal=goal, areas={}, metadata={})


def iter_elements(project: Project) -> Iterator[tuple[Optional[AreaKind], Element]]:
    """Yield (owning area, element) pairs: root goal first, then each area
    in declaration order."""
    yield None, project.root_goal
    for kind, area in project.areas.items():
        for element in area.elements:
            yield kind, element


def resolve(project: Project, element_id: str) -> Element:
    """Return the unique element with ``element_id``.

    Searches the root goal, then every area in declaration order. Raises
    :class:`ElementNotFound` when absent.
    """
    for _, element in iter_elements(project):
        if element.id == element_id:
            return element
    raise ElementNotFound(f"no element with id {element_id!r}")


def duplicate_ids(project: Project) -> list[str]:
    """Ids used by more than one element, in first-collision order."""
    seen: set[str] = set()
    dupes: list[str] = []
    for _, element in iter_elements(project):
        if element.id in seen and element.id not in dupes:
            dupes.append(element.id)
        seen.add(element.id)
    return dupes


def with_area(project: Project, area: AreaModel) -> Project:
    """Return a copy of ``project`` with ``area`` added or replaced."""
    areas = dict(project.areas)
    areas[area.kind] = area
    return replace(project, areas=areas)


def with_answer(project: Project, area_kind: AreaKind, answer: CatalogAnswer) -> Project:
    """Return a copy with ``answer`` recorded in ``area_kind``, replacing any
    earlier answer for the same item. Declares the area when missing."""
    area = project.areas.get(area_kind, AreaModel(kind=area_kind))
    kept = tuple(a for a in area.answers if a.item_id != answer.item_id)
    return with_area(project, replace(area, answers=kept + (answer,)))


def strip_spans(project: Project) -> Project:
    """Copy of ``project`` with every span reset; used for structural
    comparison that ignores source locations."""
    blank = SourceSpan.synthetic()

    def element(e: Element) -> Element:
        return replace(e, span=blank)

    areas = {
        kind: AreaModel(
            kind=kind,
            elements=tuple(element(e) for e in a.elements),
            connectors=tuple(replace(c, span=blank) for c in a.connectors),
            answers=tuple(replace(ans, span=blank) for ans in a.answers),
        )
        for kind, a in project.areas.items()
    }
    return replace(project, root_goal=element(project.root_goal), areas=areas)


def projects_equal(a: Project, b: Project) -> bool:
    """Structural equality ignoring spans but honoring declaration order."""
    sa, sb = strip_spans(a), strip_spans(b)
    if (sa.name, sa.root_goal, sa.metadata != sb.metadata) != (sb.name, sb.root_goal, False):
        return False
    if list(sa.metadata.items()) != list(sb.metadata.items()):
        return False
    return list(sa.areas.items()) == list(sb.areas.items())

"""The closed relation schema for the knowledge graph.

The curated relation list has 46 entries; HasImpact appears in it twice, so
the enumeration below carries 45 distinct members. Lookup is
case-insensitive, serialization always emits the canonical casing.
"""

from __future__ import annotations

from enum import Enum

from .textnorm import camel_words, normalize_text

# The curated list, verbatim and in order (46 entries, one duplicate).
RELATION_NAMES_AS_LISTED: tuple[str, ...] = (
    "HasStatistic",
    "HasNumericValue",
    "HasUnitOfMeasurement",
    "HasContext",
    "HasSource",
    "HasSubject",
    "HasAction",
    "HasAverageValue",
    "HasMinValue",
    "HasMaxValue",
    "HasImpact",
    "HasPercentileValue",
    "HasTrend",
    "HasComparison",
    "HasImpact",
    "HasCorrelation",
    "Reduces",
    "Saves",
    "Decreases",
    "Increases",
    "EfficiencyOf",
    "PercentageOf",
    "RatioOfFrequencyOf",
    "RateOf",
    "VolumeOf",
    "EmissionOf",
    "ConsumptionOf",
    "ImpactOf",
    "BenefitOf",
    "AdvantageOf",
    "DisadvantageOf",
    "RiskOf",
    "PreventionOf",
    "ProtectionOf",
    "PreservationOf",
    "ConservationOf",
    "RecoveryOf",
    "ManagementOf",
    "RegulationOf",
    "PolicyOf",
    "InitiativeOf",
    "StrategyOf",
    "AdaptationOf",
    "MitigationOf",
    "HasPolicyTarget",
    "HasCapacity",
)

RELATION_LIST_SIZE = len(RELATION_NAMES_AS_LISTED)  # 46, duplicate included


class RelationKind(str, Enum):
    """One member per distinct relation name, in first-occurrence order."""

    HAS_STATISTIC = "HasStatistic"
    HAS_NUMERIC_VALUE = "HasNumericValue"
    HAS_UNIT_OF_MEASUREMENT = "HasUnitOfMeasurement"
    HAS_CONTEXT = "HasContext"
    HAS_SOURCE = "HasSource"
    HAS_SUBJECT = "HasSubject"
    HAS_ACTION = "HasAction"
    HAS_AVERAGE_VALUE = "HasAverageValue"
    HAS_MIN_VALUE = "HasMinValue"
    HAS_MAX_VALUE = "HasMaxValue"
    HAS_IMPACT = "HasImpact"
    HAS_PERCENTILE_VALUE = "HasPercentileValue"
    HAS_TREND = "HasTrend"
    HAS_COMPARISON = "HasComparison"
    HAS_CORRELATION = "HasCorrelation"
    REDUCES = "Reduces"
    SAVES = "Saves"
    DECREASES = "Decreases"
    INCREASES = "Increases"
    EFFICIENCY_OF = "EfficiencyOf"
    PERCENTAGE_OF = "PercentageOf"
    RATIO_OF_FREQUENCY_OF = "RatioOfFrequencyOf"
    RATE_OF = "RateOf"
    VOLUME_OF = "VolumeOf"
    EMISSION_OF = "EmissionOf"
    CONSUMPTION_OF = "ConsumptionOf"
    IMPACT_OF = "ImpactOf"
    BENEFIT_OF = "BenefitOf"
    ADVANTAGE_OF = "AdvantageOf"
    DISADVANTAGE_OF = "DisadvantageOf"
    RISK_OF = "RiskOf"
    PREVENTION_OF = "PreventionOf"
    PROTECTION_OF = "ProtectionOf"
    PRESERVATION_OF = "PreservationOf"
    CONSERVATION_OF = "ConservationOf"
    RECOVERY_OF = "RecoveryOf"
    MANAGEMENT_OF = "ManagementOf"
    REGULATION_OF = "RegulationOf"
    POLICY_OF = "PolicyOf"
    INITIATIVE_OF = "InitiativeOf"
    STRATEGY_OF = "StrategyOf"
    ADAPTATION_OF = "AdaptationOf"
    MITIGATION_OF = "MitigationOf"
    HAS_POLICY_TARGET = "HasPolicyTarget"
    HAS_CAPACITY = "HasCapacity"

    @property
    def words(self) -> tuple[str, ...]:
        """Lowercase word split of the canonical name."""
        return camel_words(self.value)


_BY_CASEFOLD = {member.value.casefold(): member for member in RelationKind}


def resolve_relation(name: str) -> RelationKind | None:
    """Case-insensitive lookup of a relation name; None when unknown."""
    return _BY_CASEFOLD.get(normalize_text(name).casefold())


def render_relations_block() -> str:
    """All distinct canonical names, one per line, for prompt templates."""
    return "\n".join(member.value for member in RelationKind)

"""
Dose, consumption-limit, exposure and risk-coefficient equations.

Internal units are kg, mg and days; conversions from grams and months
happen when input files are read.
"""
import math
from dataclasses import dataclass, replace

from djapps.core.exceptions import DomainError


DAYS_PER_YEAR = 365.25
# exposure factor denominator, as published
EXPOSURE_FACTOR_DAYS_PER_YEAR = 365.0
WEEKS_PER_YEAR = 52.0
DAYS_PER_MONTH = 30.44

RFD_CHILDREN_AND_SENIORS = 0.0001
RFD_ADULTS = 0.0003

LIFE_EXPECTANCY_YEARS = 78.0
SUBSTITUTION_FRACTION = 0.6037


def _require_nonnegative(**values):
    for name, value in values.items():
        if value < 0:
            raise DomainError('%s must not be negative, got %s.' % (name, value))


def _require_positive(**values):
    for name, value in values.items():
        if not value > 0:
            raise DomainError('%s must be positive, got %s.' % (name, value))


def total_dose(concentration, ingestion, duration, frequency):
    """mg/kg * kg/event * days * events/day -> mg."""
    _require_nonnegative(
        concentration=concentration, ingestion=ingestion,
        duration=duration, frequency=frequency)
    return concentration * ingestion * duration * frequency


def average_daily_dose(total_dose, body_weight, life_expectancy):
    """Total dose (mg) over body weight (kg) and lifetime (years) -> mg/kg/day."""
    _require_positive(body_weight=body_weight, life_expectancy=life_expectancy)
    return total_dose / (body_weight * life_expectancy * DAYS_PER_YEAR)


def consumption_limit_kg_per_day(rfd, body_weight, concentration):
    _require_positive(concentration=concentration)
    return rfd * body_weight / concentration


def consumption_limit_meals_per_month(cr_lim, portion_mass):
    _require_positive(portion_mass=portion_mass)
    return cr_lim * DAYS_PER_MONTH / portion_mass


def exposure_factor(days_per_week, exposure_years, averaging_years):
    if not 0 <= days_per_week <= 7:
        raise DomainError('days_per_week must lie in [0, 7], got %s.' % days_per_week)
    _require_positive(averaging_years=averaging_years)
    _require_nonnegative(exposure_years=exposure_years)
    return (days_per_week * WEEKS_PER_YEAR * exposure_years) / (
        averaging_years * EXPOSURE_FACTOR_DAYS_PER_YEAR)


def daily_intake(intake_per_event, events_per_month):
    """Average daily intake (kg/day) from a per-event mass and a monthly frequency."""
    _require_nonnegative(intake_per_event=intake_per_event, events_per_month=events_per_month)
    return intake_per_event * events_per_month / DAYS_PER_MONTH


@dataclass(frozen=True)
class RiskVerdict:
    risk_coefficient: float

    @property
    def acceptable(self):
        # a coefficient of exactly one is not acceptable
        return self.risk_coefficient < 1.0

    def to_dict(self):
        return {
            'risk_coefficient': self.risk_coefficient,
            'acceptable': self.acceptable,
        }


def risk_coefficient(exposure, rfd):
    _require_positive(rfd=rfd)
    return RiskVerdict(exposure / rfd)


@dataclass(frozen=True)
class ExposureProfile:
    """
    Consumption habit of one population group.

    ``intake_rate`` is the mass eaten per consumption event (kg) and
    ``frequency`` is in events per day; both ``frequency`` and ``duration``
    (days) are derived from the weekly schedule when omitted.
    """
    concentration: float
    intake_rate: float
    body_weight: float
    exposure_days_per_week: float
    exposure_years: float
    averaging_years: float
    substitution_fraction: float = SUBSTITUTION_FRACTION
    reference_dose: float = RFD_CHILDREN_AND_SENIORS
    life_expectancy: float = LIFE_EXPECTANCY_YEARS
    frequency: float = None
    duration: float = None
    group: str = ''
    portion_mass: float = None

    def __post_init__(self):
        _require_nonnegative(concentration=self.concentration)
        _require_positive(
            intake_rate=self.intake_rate,
            body_weight=self.body_weight,
            exposure_years=self.exposure_years,
            averaging_years=self.averaging_years,
            reference_dose=self.reference_dose,
            life_expectancy=self.life_expectancy)
        if not 0 <= self.exposure_days_per_week <= 7:
            raise DomainError(
                'exposure_days_per_week must lie in [0, 7], got %s.' % self.exposure_days_per_week)
        if not 0 <= self.substitution_fraction <= 1:
            raise DomainError(
                'substitution_fraction must lie in [0, 1], got %s.' % self.substitution_fraction)
        if self.frequency is None:
            object.__setattr__(self, 'frequency', self.exposure_days_per_week / 7.0)
        if self.duration is None:
            object.__setattr__(self, 'duration', self.exposure_years * DAYS_PER_YEAR)
        if self.portion_mass is None:
            object.__setattr__(self, 'portion_mass', self.intake_rate)
        _require_nonnegative(frequency=self.frequency, duration=self.duration)

    @property
    def shark_intake_rate(self):
        """Intake per event attributable to substituted shark meat."""
        return self.intake_rate * self.substitution_fraction

    def with_concentration(self, concentration):
        return replace(self, concentration=concentration)


def exposure(profile):
    """E = C * TI * FE / BW with TI scaled by the substitution fraction."""
    fe = exposure_factor(
        profile.exposure_days_per_week, profile.exposure_years, profile.averaging_years)
    return profile.concentration * profile.shark_intake_rate * fe / profile.body_weight


@dataclass(frozen=True)
class ConsumptionLimits:
    kg_per_day: float
    meals_per_month: float
    fish_kg_per_day: float
    fish_meals_per_month: float

    def to_dict(self):
        return {
            'kg_per_day': self.kg_per_day,
            'meals_per_month': self.meals_per_month,
            'fish_kg_per_day': self.fish_kg_per_day,
            'fish_meals_per_month': self.fish_meals_per_month,
        }


def consumption_limits(profile):
    """
    Maximum allowed shark consumption, and the fish consumption it allows
    once only ``substitution_fraction`` of fish products is shark.
    """
    kg_per_day = consumption_limit_kg_per_day(
        profile.reference_dose, profile.body_weight, profile.concentration)
    meals = consumption_limit_meals_per_month(kg_per_day, profile.portion_mass)
    if profile.substitution_fraction > 0:
        fish_kg = kg_per_day / profile.substitution_fraction
        fish_meals = meals / profile.substitution_fraction
    else:
        fish_kg = fish_meals = math.inf
    return ConsumptionLimits(kg_per_day, meals, fish_kg, fish_meals)


def break_even_concentration(profile):
    """Concentration (mg/kg) at which the risk coefficient reaches one."""
    per_unit = exposure(profile.with_concentration(1.0))
    if per_unit == 0:
        return math.inf
    return profile.reference_dose / per_unit


@dataclass(frozen=True)
class ProfileAssessment:
    profile: ExposureProfile
    exposure: float
    verdict: RiskVerdict
    average_daily_dose: float
    limits: ConsumptionLimits
    break_even_concentration: float

    def to_dict(self):
        return {
            'group': self.profile.group,
            'concentration': self.profile.concentration,
            'reference_dose': self.profile.reference_dose,
            'exposure': self.exposure,
            'risk_coefficient': self.verdict.risk_coefficient,
            'acceptable': self.verdict.acceptable,
            'average_daily_dose': self.average_daily_dose,
            'consumption_limits': self.limits.to_dict(),
            'break_even_concentration': self.break_even_concentration,
        }


def assess(profile):
    e = exposure(profile)
    dose = total_dose(
        profile.concentration, profile.shark_intake_rate, profile.duration, profile.frequency)
    if profile.concentration > 0:
        limits = consumption_limits(profile)
    else:
        limits = ConsumptionLimits(math.inf, math.inf, math.inf, math.inf)
    return ProfileAssessment(
        profile=profile,
        exposure=e,
        verdict=risk_coefficient(e, profile.reference_dose),
        average_daily_dose=average_daily_dose(dose, profile.body_weight, profile.life_expectancy),
        limits=limits,
        break_even_concentration=break_even_concentration(profile),
    )

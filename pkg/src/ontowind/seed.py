"""The embedded wind-energy seed ontology.

Four general concepts (data, models, structural components, organizations),
the prose-documented sub-hierarchies beneath them, and five named
organization instances. Every weight here is repo data reflecting manual
expert judgement: unambiguous wind terms sit at 1.0, ambiguous ones lower
(e.g. "temperature" 0.2), and all of them are trivially editable.
"""

from __future__ import annotations

from .model import Concept, EntryKind, Instance, LexicalEntry, Ontology


def _concept(
    cid: str,
    parent: str | None = None,
    en: tuple[str, float] | None = None,
    tr: tuple[str, float] | None = None,
    syn: tuple[tuple[str, float], ...] = (),
    syn_tr: tuple[tuple[str, float], ...] = (),
) -> Concept:
    entries = []
    if en is not None:
        entries.append(LexicalEntry(en[0], "EN", EntryKind.PRIMARY_LABEL, en[1]))
    if tr is not None:
        entries.append(LexicalEntry(tr[0], "TR", EntryKind.PRIMARY_LABEL, tr[1]))
    entries.extend(LexicalEntry(term, "EN", EntryKind.SYNONYM, weight) for term, weight in syn)
    entries.extend(LexicalEntry(term, "TR", EntryKind.SYNONYM, weight) for term, weight in syn_tr)
    return Concept(id=cid, label=cid, parent=parent, lexicon=tuple(entries))


_CONCEPTS = (
    # Measurement and forecast data.
    _concept("WindRelatedData", en=("wind data", 1.0), tr=("rüzgar verisi", 1.0)),
    _concept(
        "WindSpeed",
        "WindRelatedData",
        en=("wind speed", 0.9),
        tr=("rüzgar hızı", 0.9),
        syn=(("wind velocity", 0.8),),
    ),
    _concept("WindDirection", "WindRelatedData", en=("wind direction", 0.9), tr=("rüzgar yönü", 0.9)),
    _concept("Temperature", "WindRelatedData", en=("temperature", 0.2), tr=("sıcaklık", 0.2)),
    _concept("Humidity", "WindRelatedData", en=("humidity", 0.2), tr=("nem", 0.2)),
    # Weather-prediction and power-forecast models.
    _concept("WindRelatedModel", en=("wind model", 0.8), tr=("rüzgar modeli", 0.8)),
    _concept(
        "NumericalWeatherPrediction",
        "WindRelatedModel",
        en=("numerical weather prediction", 0.5),
        tr=("sayısal hava tahmini", 0.5),
        syn=(("NWP", 0.4),),
    ),
    _concept("ALADIN", "NumericalWeatherPrediction", en=("ALADIN", 0.25)),
    _concept("IFS", "NumericalWeatherPrediction", en=("IFS", 0.2), syn=(("integrated forecast system", 0.4),)),
    _concept("WRF", "NumericalWeatherPrediction", en=("WRF", 0.5), syn=(("weather research and forecasting", 0.6),)),
    _concept(
        "WindPowerForecastModel",
        "WindRelatedModel",
        en=("wind power forecast model", 1.0),
        tr=("rüzgar gücü tahmin modeli", 1.0),
        syn=(("wind power forecasting", 1.0),),
    ),
    _concept("ANFIS", "WindPowerForecastModel", en=("ANFIS", 0.3), syn=(("adaptive neuro-fuzzy inference system", 0.3),)),
    _concept("ANN", "WindPowerForecastModel", en=("ANN", 0.3), syn=(("artificial neural network", 0.3),)),
    _concept("SVM", "WindPowerForecastModel", en=("SVM", 0.2), syn=(("support vector machine", 0.2),)),
    # Physical components of a wind power plant.
    _concept(
        "WindRelatedStructuralComponent",
        en=("wind plant component", 0.9),
        tr=("rüzgar santrali bileşeni", 0.9),
    ),
    _concept(
        "WindPowerPlant",
        "WindRelatedStructuralComponent",
        en=("wind power plant", 1.0),
        tr=("rüzgar enerji santrali", 1.0),
        syn=(("wind farm", 1.0), ("wind park", 0.9)),
        syn_tr=(("rüzgar çiftliği", 0.9),),
    ),
    _concept(
        "WindTurbine",
        "WindRelatedStructuralComponent",
        en=("wind turbine", 1.0),
        tr=("rüzgar türbini", 1.0),
        syn=(("windmill", 0.6),),
    ),
    _concept("Sensor", "WindRelatedStructuralComponent", en=("sensor", 0.3), tr=("sensör", 0.3)),
    # National and international organizations.
    _concept("WindRelatedOrganization", en=("wind energy organization", 1.0), tr=("rüzgar enerjisi kuruluşu", 1.0)),
    _concept(
        "InternationalOrganization",
        "WindRelatedOrganization",
        en=("international organization", 0.1),
        tr=("uluslararası kuruluş", 0.1),
    ),
    _concept(
        "NationalOrganization",
        "WindRelatedOrganization",
        en=("national organization", 0.1),
        tr=("ulusal kuruluş", 0.1),
    ),
    _concept(
        "GovernmentalEnergyOrganization",
        "NationalOrganization",
        en=("governmental energy organization", 0.3),
        tr=("kamu enerji kuruluşu", 0.3),
    ),
    _concept(
        "NationalWeatherService",
        "GovernmentalEnergyOrganization",
        en=("national weather service", 0.3),
        tr=("ulusal meteoroloji servisi", 0.3),
        syn=(("meteorological service", 0.3),),
    ),
)

_INSTANCES = (
    Instance(
        "MGM",
        "NationalWeatherService",
        {
            "label": "MGM",
            "labelEN": "Turkish State Meteorological Service",
            "labelTR": "Meteoroloji Genel Müdürlüğü",
            "country": "TR",
            "webAddress": "https://www.mgm.gov.tr",
            "twitterAccount": "https://twitter.com/meteoroloji",
        },
    ),
    Instance(
        "ECMWF",
        "InternationalOrganization",
        {
            "label": "ECMWF",
            "labelEN": "European Centre for Medium-Range Weather Forecasts",
            "webAddress": "https://www.ecmwf.int",
            "twitterAccount": "https://twitter.com/ECMWF",
        },
    ),
    Instance(
        "WMO",
        "InternationalOrganization",
        {
            "label": "WMO",
            "labelEN": "World Meteorological Organization",
            "webAddress": "https://wmo.int",
            "twitterAccount": "https://twitter.com/WMO",
        },
    ),
    Instance(
        "CENER",
        "NationalOrganization",
        {
            "label": "CENER",
            "labelEN": "National Renewable Energy Centre of Spain",
            "country": "ES",
            "webAddress": "https://www.cener.com",
        },
    ),
    Instance(
        "NCAR",
        "NationalOrganization",
        {
            "label": "NCAR",
            "labelEN": "National Center for Atmospheric Research",
            "country": "US",
            "webAddress": "https://ncar.ucar.edu",
            "twitterAccount": "https://twitter.com/NCAR_Science",
        },
    ),
)


def load_seed() -> Ontology:
    """The embedded seed ontology; always passes :func:`ontowind.model.validate`."""
    return Ontology.build(_CONCEPTS, _INSTANCES)

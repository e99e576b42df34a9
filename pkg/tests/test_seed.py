from ontowind import EntryKind, validate


def test_exactly_four_roots(seed):
    assert seed.roots == [
        "WindRelatedData",
        "WindRelatedModel",
        "WindRelatedOrganization",
        "WindRelatedStructuralComponent",
    ]


def test_seed_validates_clean(seed):
    assert validate(seed) == []


def test_data_subconcepts(seed):
    children = {cid for cid, c in seed.concepts.items() if c.parent == "WindRelatedData"}
    assert children == {"WindSpeed", "WindDirection", "Temperature", "Humidity"}


def test_structural_subconcepts(seed):
    children = {cid for cid, c in seed.concepts.items() if c.parent == "WindRelatedStructuralComponent"}
    assert children == {"WindPowerPlant", "WindTurbine", "Sensor"}


def test_organization_chain(seed):
    assert seed.concepts["NationalWeatherService"].parent == "GovernmentalEnergyOrganization"
    assert seed.concepts["GovernmentalEnergyOrganization"].parent == "NationalOrganization"
    assert seed.concepts["NationalOrganization"].parent == "WindRelatedOrganization"
    assert seed.concepts["InternationalOrganization"].parent == "WindRelatedOrganization"


def test_mgm_attributes(seed):
    mgm = seed.instances["MGM"]
    assert mgm.concept_id == "NationalWeatherService"
    assert mgm.attributes["labelEN"] == "Turkish State Meteorological Service"
    assert mgm.attributes["country"] == "TR"
    assert mgm.attributes["webAddress"].startswith("https://")
    assert "twitterAccount" in mgm.attributes


def test_named_instances_present(seed):
    assert set(seed.instances) == {"MGM", "ECMWF", "WMO", "CENER", "NCAR"}
    assert seed.instances["ECMWF"].concept_id == "InternationalOrganization"
    assert seed.instances["WMO"].concept_id == "InternationalOrganization"
    assert seed.instances["CENER"].concept_id == "NationalOrganization"
    assert seed.instances["NCAR"].concept_id == "NationalOrganization"


def test_all_weights_within_unit_interval(seed):
    for concept in seed.concepts.values():
        for entry in concept.lexicon:
            assert 0.0 <= entry.weight <= 1.0


def test_every_concept_has_an_english_primary_label(seed):
    for concept in seed.concepts.values():
        assert concept.primary_label("EN") is not None


def test_ambiguous_terms_carry_low_weights(seed):
    by_term = {
        e.term: e.weight
        for c in seed.concepts.values()
        for e in c.lexicon
        if e.language == "EN" and e.kind is EntryKind.PRIMARY_LABEL
    }
    assert by_term["temperature"] == 0.2
    assert by_term["humidity"] == 0.2
    assert by_term["sensor"] == 0.3
    assert by_term["ANN"] == 0.3
    assert by_term["wind turbine"] == 1.0

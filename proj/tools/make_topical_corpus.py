#!/usr/bin/env python3
"""Writes the synthetic topical corpus under data/topical/.

Every source document talks about one topic. Each topic owns one top-level
branch of the taxonomy and a private vocabulary, so neighbouring segments of a
generated document differ both ontologically and lexically. The noisy variant
drops the entity from a share of sentences and draws a share of content words
from a pool common to all topics.

Output is deterministic; rerun after editing the tables below.
"""

import argparse
import json
import pathlib
import random

# (class, parent) pairs; Thing is the root.
TAXONOMY = [
    ("Agent", "Thing"), ("Person", "Agent"), ("OfficeHolder", "Person"),
    ("Politician", "Person"), ("President", "Politician"), ("Senator", "Politician"),
    ("PrimeMinister", "Politician"), ("Artist", "Person"), ("MusicalArtist", "Artist"),
    ("Painter", "Artist"), ("Writer", "Artist"), ("Athlete", "Person"),
    ("SoccerPlayer", "Athlete"), ("TennisPlayer", "Athlete"), ("Scientist", "Person"),
    ("Organisation", "Agent"), ("PoliticalParty", "Organisation"), ("Company", "Organisation"),
    ("GovernmentAgency", "Organisation"), ("SportsTeam", "Organisation"),
    ("SoccerClub", "SportsTeam"), ("EducationalInstitution", "Organisation"),
    ("University", "EducationalInstitution"),
    ("Place", "Thing"), ("PopulatedPlace", "Place"), ("Country", "PopulatedPlace"),
    ("Settlement", "PopulatedPlace"), ("City", "Settlement"), ("Town", "Settlement"),
    ("NaturalPlace", "Place"), ("Mountain", "NaturalPlace"), ("Volcano", "Mountain"),
    ("BodyOfWater", "NaturalPlace"), ("Lake", "BodyOfWater"), ("Stream", "BodyOfWater"),
    ("River", "Stream"), ("Desert", "NaturalPlace"),
    ("Work", "Thing"), ("MusicalWork", "Work"), ("Album", "MusicalWork"), ("Song", "MusicalWork"),
    ("WrittenWork", "Work"), ("Book", "WrittenWork"), ("Novel", "Book"), ("Poem", "WrittenWork"),
    ("Film", "Work"), ("Artwork", "Work"), ("Painting", "Artwork"),
    ("Species", "Thing"), ("Eukaryote", "Species"), ("Animal", "Eukaryote"), ("Mammal", "Animal"),
    ("Bird", "Animal"), ("Fish", "Animal"), ("Reptile", "Animal"), ("Insect", "Animal"),
    ("Plant", "Eukaryote"), ("FloweringPlant", "Plant"), ("Conifer", "Plant"),
    ("Event", "Thing"), ("SocietalEvent", "Event"), ("MilitaryConflict", "SocietalEvent"),
    ("Election", "SocietalEvent"), ("Convention", "SocietalEvent"), ("NaturalEvent", "Event"),
    ("Earthquake", "NaturalEvent"), ("Treaty", "SocietalEvent"),
    ("Device", "Thing"), ("Weapon", "Device"), ("Firearm", "Weapon"), ("Engine", "Device"),
    ("Instrument", "Device"), ("Camera", "Device"), ("Computer", "Device"),
    ("Food", "Thing"), ("Beverage", "Food"), ("Wine", "Beverage"), ("Beer", "Beverage"),
    ("Cheese", "Food"), ("Dish", "Food"), ("Dessert", "Dish"),
    ("MeanOfTransportation", "Thing"), ("Automobile", "MeanOfTransportation"),
    ("Aircraft", "MeanOfTransportation"), ("Ship", "MeanOfTransportation"),
    ("Train", "MeanOfTransportation"), ("Locomotive", "Train"), ("Rocket", "MeanOfTransportation"),
    ("Disease", "Thing"), ("InfectiousDisease", "Disease"), ("ViralDisease", "InfectiousDisease"),
    ("BacterialDisease", "InfectiousDisease"), ("CardiovascularDisease", "Disease"),
    ("GeneticDisorder", "Disease"),
    ("ChemicalSubstance", "Thing"), ("ChemicalCompound", "ChemicalSubstance"),
    ("ChemicalElement", "ChemicalSubstance"), ("Metal", "ChemicalElement"),
    ("NobleGas", "ChemicalElement"), ("Mineral", "ChemicalSubstance"),
    ("CelestialBody", "Thing"), ("Planet", "CelestialBody"), ("DwarfPlanet", "Planet"),
    ("Star", "CelestialBody"), ("Galaxy", "CelestialBody"), ("Asteroid", "CelestialBody"),
    ("Constellation", "CelestialBody"),
    ("AnatomicalStructure", "Thing"), ("Bone", "AnatomicalStructure"),
    ("Muscle", "AnatomicalStructure"), ("Organ", "AnatomicalStructure"), ("Brain", "Organ"),
    ("Nerve", "AnatomicalStructure"), ("Artery", "AnatomicalStructure"),
    ("Activity", "Thing"), ("Sport", "Activity"), ("TeamSport", "Sport"),
    ("Game", "Activity"), ("BoardGame", "Game"),
    ("Language", "Thing"), ("ProgrammingLanguage", "Language"), ("Currency", "Thing"),
]

PARENT = dict(TAXONOMY)


def chain(cls):
    """DBpedia-style class list: the class and its ancestors below Thing."""
    out = []
    while cls != "Thing":
        out.append(cls)
        cls = PARENT[cls]
    return out


# Entities whose classes are fixed by the classic example, not by the chain.
EXTRA_GAZETTEER = {
    "Barack Obama": ["Person", "Agent", "OfficeHolder"],
    "George Bush": ["Person", "Agent", "OfficeHolder"],
    "Michael Jackson": ["Person", "Agent", "Artist", "MusicalArtist"],
}

# topic -> (entities as (surface, leaf class), private vocabulary)
TOPICS = {
    "politics": (
        [("Angela Merkel", "PrimeMinister"), ("Abraham Lincoln", "President"),
         ("Winston Churchill", "PrimeMinister"), ("Ted Kennedy", "Senator"),
         ("Labour Party", "PoliticalParty"), ("Federal Reserve", "GovernmentAgency"),
         ("Kofi Annan", "OfficeHolder"), ("Nelson Mandela", "President")],
        "parliament ballot minister legislation cabinet coalition senate governor campaign voter "
        "constituency referendum diplomat embassy treasury budget reform policy debate veto "
        "mandate opposition delegate caucus statute",
    ),
    "geography": (
        [("Mount Everest", "Mountain"), ("Lake Baikal", "Lake"), ("Amazon River", "River"),
         ("Sahara", "Desert"), ("Kilimanjaro", "Volcano"), ("Lisbon", "City"),
         ("Norway", "Country"), ("Hallstatt", "Town")],
        "glacier valley plateau coastline terrain latitude altitude canyon basin delta "
        "peninsula tundra erosion cliff meadow archipelago fjord summit ridge estuary "
        "savanna lagoon highland shoreline watershed",
    ),
    "arts": (
        [("Moby Dick", "Novel"), ("Thriller", "Album"), ("Mona Lisa", "Painting"),
         ("Casablanca", "Film"), ("The Raven", "Poem"), ("Bohemian Rhapsody", "Song"),
         ("War and Peace", "Novel"), ("Guernica", "Painting")],
        "chapter melody canvas manuscript stanza chorus sculpture gallery portrait verse "
        "brushstroke narrator screenplay rhythm publisher orchestra sonnet exhibit curator "
        "premiere libretto easel lyric prose symphony",
    ),
    "wildlife": (
        [("Bengal Tiger", "Mammal"), ("Bald Eagle", "Bird"), ("Great White Shark", "Fish"),
         ("Komodo Dragon", "Reptile"), ("Monarch Butterfly", "Insect"), ("Giant Sequoia", "Conifer"),
         ("African Elephant", "Mammal"), ("Sunflower", "FloweringPlant")],
        "predator habitat burrow migration prey nest herd feather fur fang pollen hatchling "
        "camouflage mating forage hive swamp antler tusk beak scales gills canopy seedling burrowing",
    ),
    "history": (
        [("Battle of Hastings", "MilitaryConflict"), ("World War II", "MilitaryConflict"),
         ("Treaty of Versailles", "Treaty"), ("Lisbon Earthquake", "Earthquake"),
         ("Congress of Vienna", "Convention"), ("Hundred Years War", "MilitaryConflict"),
         ("Peace of Westphalia", "Treaty"), ("Reform Act Election", "Election")],
        "siege army cavalry infantry empire dynasty revolt truce armistice fortress rebellion "
        "kingdom monarch conquest garrison regiment invasion chronicle archive ruins "
        "emperor crusade musket banner battlefield",
    ),
    "machinery": (
        [("Colt Revolver", "Firearm"), ("Steam Engine", "Engine"), ("Stradivarius", "Instrument"),
         ("Leica", "Camera"), ("ENIAC", "Computer"), ("Winchester Rifle", "Firearm"),
         ("Diesel Engine", "Engine"), ("Hasselblad", "Camera")],
        "piston gear lever valve turbine cylinder bolt crank spring trigger circuit lens "
        "shutter barrel chassis torque gasket sprocket flywheel rotor bearing axle "
        "lubricant throttle rivet",
    ),
    "cuisine": (
        [("Bordeaux", "Wine"), ("Guinness", "Beer"), ("Camembert", "Cheese"), ("Paella", "Dish"),
         ("Tiramisu", "Dessert"), ("Champagne", "Wine"), ("Parmesan", "Cheese"), ("Risotto", "Dish")],
        "recipe flavor kitchen spice oven simmer garlic butter saucepan chef dough vinegar "
        "herb ferment aroma cellar roast pastry broth sugar vineyard marinade "
        "dumpling skillet tasting",
    ),
    "transport": (
        [("Model T", "Automobile"), ("Concorde", "Aircraft"), ("Titanic", "Ship"),
         ("Flying Scotsman", "Locomotive"), ("Saturn V", "Rocket"), ("Boeing 747", "Aircraft"),
         ("Queen Mary", "Ship"), ("Orient Express", "Train")],
        "runway cockpit hull voyage railway cargo passenger harbor propeller fuselage "
        "carriage highway launch tunnel depot freight conductor mileage wagon station "
        "airport deck anchor pilot timetable",
    ),
    "medicine": (
        [("Influenza", "ViralDisease"), ("Tuberculosis", "BacterialDisease"),
         ("Cholera", "BacterialDisease"), ("Measles", "ViralDisease"),
         ("Hemophilia", "GeneticDisorder"), ("Angina", "CardiovascularDisease"),
         ("Malaria", "InfectiousDisease"), ("Smallpox", "ViralDisease")],
        "symptom diagnosis fever vaccine patient clinic dosage infection therapy syringe "
        "nurse antibiotic epidemic quarantine surgeon prescription ward immunity pathogen "
        "remedy ointment bandage outbreak recovery stethoscope",
    ),
    "chemistry": (
        [("Sodium Chloride", "ChemicalCompound"), ("Uranium", "Metal"), ("Neon", "NobleGas"),
         ("Quartz", "Mineral"), ("Ammonia", "ChemicalCompound"), ("Argon", "NobleGas"),
         ("Titanium", "Metal"), ("Feldspar", "Mineral")],
        "molecule reagent solvent catalyst isotope beaker titration oxidation crystal "
        "electron valence precipitate acid alkali compound distillation flask polymer "
        "residue spectrum reactant ion lattice enzyme pipette",
    ),
    "astronomy": (
        [("Jupiter", "Planet"), ("Pluto", "DwarfPlanet"), ("Sirius", "Star"),
         ("Andromeda", "Galaxy"), ("Ceres", "Asteroid"), ("Orion", "Constellation"),
         ("Saturn", "Planet"), ("Betelgeuse", "Star")],
        "telescope orbit nebula eclipse comet gravity observatory lightyear supernova "
        "cosmos meteor quasar redshift astronomer parallax horizon zenith equinox "
        "solstice pulsar starlight corona crater magnitude",
    ),
    "anatomy": (
        [("Femur", "Bone"), ("Biceps", "Muscle"), ("Cerebellum", "Brain"), ("Liver", "Organ"),
         ("Sciatic Nerve", "Nerve"), ("Aorta", "Artery"), ("Tibia", "Bone"), ("Diaphragm", "Muscle")],
        "tissue cartilage tendon ligament skeleton joint marrow cell spine vertebra "
        "membrane gland cortex neuron skull pelvis sinew limb tendonitis tissues "
        "ribcage torso nostril kneecap knuckle",
    ),
    "sports": (
        [("Football", "TeamSport"), ("Basketball", "TeamSport"), ("Chess", "BoardGame"),
         ("Tennis", "Sport"), ("Rugby", "TeamSport"), ("Backgammon", "BoardGame"),
         ("Fencing", "Sport"), ("Volleyball", "TeamSport")],
        "tournament referee stadium coach goal league championship scoreboard trophy "
        "medal penalty dribble racket opponent playoff athlete inning wicket striker "
        "goalkeeper umpire serve rally sprint",
    ),
}

SHARED_POOL = (
    "people year time day report system group area question house city work number part "
    "place case week company problem fact money story month night point study book job "
    "word business issue side kind head service friend power hour game line end member law "
    "car name president team minute idea body information back parent face level office "
    "door health person art war history party result change morning reason research girl "
    "guy moment air teacher force education"
).split()

GLUE = ["the", "of", "and", "with", "in", "a", "to", "was", "by", "for", "from", "on", "at"]


def sentence(rng, entities, vocab, with_entity, shared_share):
    def word():
        if shared_share > 0 and rng.random() < shared_share:
            return rng.choice(SHARED_POOL)
        return rng.choice(vocab)

    n_words = rng.randint(5, 8)
    parts = []
    if with_entity:
        parts.append(rng.choice(entities)[0])
    for i in range(n_words):
        parts.append(rng.choice(GLUE))
        parts.append(word())
    if with_entity and rng.random() < 0.4:
        parts.append("and")
        parts.append(rng.choice(entities)[0])
    text = " ".join(parts)
    return text[0].upper() + text[1:] + "."


def write_corpus(root, rng, sentences_per_doc, no_entity_share, shared_share):
    root.mkdir(parents=True, exist_ok=True)
    for old in root.glob("*.txt"):
        old.unlink()
    for topic, (entities, vocab_text) in TOPICS.items():
        vocab = vocab_text.split()
        lines = []
        for i in range(sentences_per_doc):
            with_entity = rng.random() >= no_entity_share
            lines.append(sentence(rng, entities, vocab, with_entity, shared_share))
        (root / f"{topic}.txt").write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "topical"))
    ap.add_argument("--seed", type=int, default=20170417)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    nodes = [{"id": "Thing", "parents": []}] + [{"id": c, "parents": [p]} for c, p in TAXONOMY]
    (out / "taxonomy.json").write_text(json.dumps({"root": "Thing", "nodes": nodes}, indent=1) + "\n")

    gazetteer = dict(EXTRA_GAZETTEER)
    for entities, _ in TOPICS.values():
        for surface, leaf in entities:
            gazetteer[surface] = chain(leaf)
    (out / "gazetteer.json").write_text(json.dumps(gazetteer, indent=1, sort_keys=True) + "\n")

    rng = random.Random(args.seed)
    write_corpus(out / "corpus", rng, 14, no_entity_share=0.0, shared_share=0.0)
    write_corpus(out / "corpus_noisy", rng, 14, no_entity_share=0.2, shared_share=0.3)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerate the bundled syllable lexicon at src/lineametrics/data/lexicon.tsv.

The lexicon is hand-curated. It concentrates on word classes the fallback
heuristic miscounts (silent -es/-ed endings, syllabic -le, vowel pairs
spanning two syllables, pronounced final e, -sm endings) plus the complete
vocabulary used by the bundled verse fixture, so fixture analysis never
depends on the heuristic. Counts follow standard dictionary
syllabifications.
"""
from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "src" / "lineametrics" / "data" / "lexicon.tsv"

# Monosyllables whose spelling shows two vowel groups, mostly silent -es
# plurals and -ed pasts.
SILENT_ENDINGS = """
makes takes gives lives lines shines times comes loves moves proves leaves
waves tales miles smiles stones names games notes capes ropes tunes dunes
lakes likes bikes jokes cares dares shores scores stores tides sides rides
hides glides strides states gates fates mates rates plates slates crates
breathes clothes bathes soothes scythes writhes walked talked asked looked
booked cooked turned called rolled filled seemed deemed loved moved lived
proved named famed tamed blamed played stayed prayed swayed saved waved
craved served curved carved learned burned earned yearned placed faced
graced traced spaced danced glanced chanced hoped groped draped shaped
helped worked gazed dazed praised raised ceased creased leased
"""

# Syllabic -le: the final e is not silent filler, the l carries a syllable.
SYLLABIC_LE = {
    2: """table little people able noble gentle simple humble purple middle
         battle bottle castle candle cradle eagle maple apple ankle angle
         single double trouble couple circle uncle whistle temple title idle
         needle saddle puzzle riddle rattle settle subtle struggle jungle
         marble stable bubble pebble sparkle twinkle handle bundle gamble
         tremble crumble stumble tumble rumble mumble grumble kettle beetle
         turtle thistle bristle crackle tickle pickle buckle knuckle""",
    3: """possible terrible horrible visible miracle obstacle article
         particle example principle multiple syllable""",
    4: """impossible invisible remarkable incredible unthinkable
         unbreakable unshakable improbable""",
}

# Adjacent vowel letters spanning two syllables (hiatus), or a vowel group
# otherwise worth one syllable more than the spelling suggests.
HIATUS = {
    2: """create being seeing doing going quiet poet poem diet lion giant
         royal loyal cruel fuel duel dual ruin fluid science dial trial
         riot truant""",
    3: """idea ideas area areas poetry violet violent violence usual actual
         annual casual genuine influence curious serious various glorious
         furious previous obvious devious tedious odious radiant radiance
         period radio video piano union unions diary diaries theatre
         theater museum""",
    4: """mysterious victorious imperious experience material memorial
         society variety anxiety obedient obedience ingredient curiously
         seriously variously luxurious""",
    5: """curiosity disobedience""",
}

# Final e that is pronounced, so the silent-e subtraction is wrong.
SOUNDED_FINAL_E = {
    2: "maybe",
    3: "recipe simile",
    4: "catastrophe apostrophe epitome",
}

# Syllabic -sm endings.
SM_ENDINGS = {
    2: "rhythm rhythms prism prisms chasm spasm",
    3: "sarcasm",
}

# Common words the vowel-group count misses for other reasons.
ASSORTED = {
    1: "o'er e'er ne'er",
    2: """every evening sometime sometimes opened happened listened answered
         wandered nature's shadows meadows sorrows echoes arrows windows
         widows fellows yellows billows willows minutes breezes declines""",
    3: """everything everyone everywhere remembered abandoned discovered
         recovered uncovered considered bewildered embroidered""",
    4: "everybody unremembered undiscovered",
}

# Vocabulary of the bundled verse fixture, grouped by syllable count. Every
# word the fixture generator can emit must appear here so fixture analysis
# runs entirely on lexicon lookups.
FIXTURE_POOLS: dict[int, str] = {
    1: """the and of to in a he she it they we you who day night sun moon
         light dark sea sky wind rain stone tree leaf bird song heart mind
         soul hand eye eyes face voice time year world life death love hope
         fear joy pain peace war king queen man men child friend home land
         field hill stream wood fire snow ice star stars cloud storm dawn
         dusk gold green blue red white black grey gray old new young sweet
         cold warm bright dim soft loud slow swift long short high low deep
         far near good great small tall wide wild calm still through from
         with when where while then than that this what how now here there
         once not nor but or for yet so as at on up down out all each both
         few more most one two three comes goes runs walks stands falls
         sings calls hears sees knows feels finds keeps holds brings moves
         turns burns grows flows blows sleeps dreams wakes speaks tells
         waits gleams fades drifts rests breaks bends leans lifts sinks
         creeps springs leaps roams wanes""",
    2: """morning garden river mountain valley meadow forest flower shadow
         silver golden summer winter autumn season thunder sunlight
         moonlight starlight twilight music story spirit wonder silence
         whisper echo beauty sorrow darkness stillness kindness danger
         journey wander window village city tower harbor island water
         hidden broken frozen open early only lonely lovely happy heavy
         hollow yellow narrow ancient distant certain northern southern
         eastern western under over after before between beyond within
         without among upon about above below across around against away
         again although because until unto into rises passes dances
         slumbers wanders whispers murmurs gathers scatters follows borrows
         carries hurries lingers trembles sparkles twinkles brightens
         darkens softly slowly gently sweetly brightly lightly deeply
         wildly calmly truly fairly singing dancing shining gleaming
         flowing glowing falling rising drifting dreaming sleeping waking
         walking running standing burning turning growing fading breaking
         bending floating weaving winding""",
    3: """beautiful wonderful horizon remember forgotten tomorrow yesterday
         melody harmony memory mystery history wandering gathering
         villager messenger passenger departure eternal eleven another
         together beginning imagine discover continue deliver december
         november october september overhead afternoon underneath evermore
         nevermore silently suddenly quietly carefully certainly wilderness
         emptiness loneliness tenderness bitterness happiness distances
         slumbering wondering whispering glimmering shimmering flickering
         murmuring beckoning reckoning happening following borrowing
         sorrowful shadowy silvery solitude multitude gratitude distantly
         immortal enchanted forsaken unbroken unspoken awaken""",
    4: """solitary ceremony territory necessary ordinary momentary
         stationary melancholy generation celebration conversation
         revolution education invitation information destination
         explanation inspiration meditation original particular infinity
         eternity humanity majority authority security community
         everlasting unforgotten""",
    5: """imagination opportunity university possibility probability
         personality generosity hospitality anniversary organization
         examination determination consideration administration
         interpretation investigation communication civilization
         illumination""",
}


def build_entries() -> dict[str, int]:
    entries: dict[str, int] = {}

    def add(word: str, count: int) -> None:
        word = word.strip().lower()
        if not word:
            return
        if word in entries and entries[word] != count:
            raise SystemExit(
                f"conflicting counts for {word!r}: {entries[word]} vs {count}"
            )
        entries[word] = count

    for word in SILENT_ENDINGS.split():
        add(word, 1)
    for group in (SYLLABIC_LE, HIATUS, SOUNDED_FINAL_E, SM_ENDINGS, ASSORTED):
        for count, words in group.items():
            for word in words.split():
                add(word, count)
    for count, words in FIXTURE_POOLS.items():
        for word in words.split():
            add(word, count)
    return entries


def main() -> int:
    entries = build_entries()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{word}\t{count}" for word, count in sorted(entries.items())]
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(entries)} entries to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

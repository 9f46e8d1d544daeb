#!/usr/bin/env python3
"""Builds the starter accent dictionary and companion tables.

Outputs (UTF-8, committed to the repo):
  data/lexicon.tsv         surface<TAB>n_syllables<TAB>pos1[,pos2...]<TAB>flags
  data/function_words.txt  one closed-class surface per line
  data/collocations.tsv    pattern<TAB>stressed_index<TAB>stress_position

The dictionary combines a hand-curated core (every word used by the test
fixtures, words with normative stress variation, mobile-stress forms) with
paradigm expansion over stem tables restricted to accent classes whose stress
is fixed across the whole paradigm. The script fails if any fixture word is
missing from the result.
"""

import json
import re
import sys
from pathlib import Path

VOWELS = "аеёиоуыэюя"
ROOT = Path(__file__).resolve().parent.parent


def n_syl(word: str) -> int:
    return sum(1 for c in word if c in VOWELS)


def yo_syllable(word: str) -> int:
    k = 0
    for c in word:
        if c in VOWELS:
            k += 1
            if c == "ё":
                return k
    return 0


class Dictionary:
    def __init__(self):
        self.entries = {}  # surface -> (set(positions), set(flags))
        self.locked = set()  # curated surfaces paradigms must not touch

    def add(self, surface, positions, flags=(), lock=False):
        surface = surface.lower().strip()
        if isinstance(positions, int):
            positions = [positions]
        n = n_syl(surface)
        for p in positions:
            assert 1 <= p <= n, f"bad stress {p} in {surface!r} ({n} vowels)"
        yo = yo_syllable(surface)
        if yo:
            assert yo in positions, f"ё syllable {yo} unstressed in {surface!r}"
        if lock:
            self.entries[surface] = (set(positions), set(flags))
            self.locked.add(surface)
            return
        if surface in self.locked:
            return
        pos, fl = self.entries.setdefault(surface, (set(), set()))
        pos.update(positions)
        fl.update(flags)

    def dump(self):
        lines = []
        for surface in sorted(self.entries):
            pos, fl = self.entries[surface]
            flags = ",".join(sorted(fl))
            row = f"{surface}\t{n_syl(surface)}\t{','.join(map(str, sorted(pos)))}"
            if flags:
                row += f"\t{flags}"
            lines.append(row)
        return "\n".join(lines) + "\n"


D = Dictionary()

# --------------------------------------------------------------------------
# Closed-class words. Each also gets a dictionary entry so the scanner can
# realize them stressed when the meter demands it.
# --------------------------------------------------------------------------

PREPOSITIONS = {
    "в": 0, "во": 1, "без": 1, "безо": 1, "до": 1, "для": 1, "за": 1, "из": 1,
    "изо": 1, "к": 0, "ко": 1, "на": 1, "над": 1, "надо": 1, "о": 1, "об": 1,
    "обо": 1, "от": 1, "ото": 1, "по": 1, "под": 1, "подо": 1, "при": 1,
    "про": 1, "с": 0, "со": 1, "у": 1, "через": 1, "чрез": 1, "перед": 1,
    "передо": 1, "пред": 1, "предо": 1, "меж": 1, "между": 1, "близ": 1,
    "вне": 1, "среди": 2, "средь": 1, "ради": 1, "кроме": 1, "мимо": 1,
    "около": 1, "возле": 1, "подле": 1, "против": 1, "вдоль": 1, "внутри": 2,
    "позади": 3, "впереди": 3, "вокруг": 2, "сквозь": 1, "после": 1,
    "из-за": 1, "из-под": 2,
}
CONJUNCTIONS = {
    "и": 1, "а": 1, "но": 1, "да": 1, "или": 1, "иль": 1, "либо": 1, "ни": 1,
    "то": 1, "ли": 1, "же": 1, "ведь": 1, "хоть": 1, "хотя": 2, "чтоб": 1,
    "чтобы": 1, "если": 1, "ежели": 1, "когда": 2, "пока": 2, "будто": 1,
    "словно": 1, "точно": 1, "коль": 1, "коли": 2, "зато": 2, "однако": 2,
    "ибо": 1, "как": 1, "что": 1, "где": 1,
}
PARTICLES = {
    "бы": 1, "б": 0, "ж": 0, "ль": 0, "уж": 1, "не": 1, "вот": 1, "вон": 1,
    "даже": 1, "лишь": 1, "только": 1, "мол": 1, "де": 1, "ка": 1, "ну": 1,
    "пусть": 1, "пускай": 2, "аж": 1, "разве": 1, "неужели": 3, "ужель": 2,
}
PRONOUNS_CLITIC = {
    "я": 1, "ты": 1, "он": 1, "мы": 1, "вы": 1, "их": 1, "им": 1, "ей": 1,
    "мне": 1, "мной": 1, "нас": 1, "вас": 1, "нём": 1, "ней": 1, "них": 1, "ним": 1,
    "мой": 1, "твой": 1, "свой": 1, "наш": 1, "ваш": 1, "тот": 1, "та": 1,
    "те": 1, "сей": 1, "кто": 1, "весь": 1, "вся": 1, "всё": 1, "все": 1,
    "сам": 1, "чей": 1, "том": 1, "тем": 1, "той": 1, "ту": 1, "всех": 1,
}
AUXILIARIES = {
    "был": 1, "была": 2, "было": 1, "были": 1, "быть": 1, "будь": 1,
    "будьте": 1, "будет": 1, "буду": 1, "будут": 1, "будешь": 1, "будем": 1,
    "будете": 1, "есть": 1, "суть": 1,
}

FUNCTION_WORDS = []
for table, pos_tag in ((PREPOSITIONS, "prep"), (CONJUNCTIONS, "conj"),
                       (PARTICLES, "part"), (PRONOUNS_CLITIC, "pron"),
                       (AUXILIARIES, "verb")):
    for word, stress in table.items():
        FUNCTION_WORDS.append(word)
        if stress > 0:
            D.add(word, stress, ("f", pos_tag), lock=True)

# --------------------------------------------------------------------------
# Hand-curated core: fixture vocabulary, normative stress variation, mobile
# paradigm forms. Format: word stress[,stress...] [pos], '|'-separated.
# --------------------------------------------------------------------------

CORE = """
мороз 2 noun | солнце 1 noun | день 1 noun | чудесный 2 adj | ещё 2 adv
дремлешь 1 verb | дремлет 1 verb | друг 1 noun | прелестный 2 adj | пора 2 noun
красавица 2 noun | проснись 2 verb | открой 2 verb | сомкнуты 1,2 verb
негой 1 noun | нега 1 noun | взоры 1 noun | взор 1 noun | навстречу 2 adv
северной 1 adj | авроры 2 noun | аврора 2 noun | звездою 2 noun | севера 1 noun
дядя 1 noun | самых 1 adj | честных 1 adj | правил 1 noun | шутку 1 noun
шутка 1 noun | занемог 3 verb | уважать 3 verb | себя 2 pron | заставил 2 verb
лучше 1 adv | выдумать 1 verb | мог 1 verb | могла 2 verb | могли 2 verb
белеет 2 verb | парус 1 noun | одинокой 3 adj | одинокий 3 adj | тумане 2 noun
туман 2 noun | моря 1 noun | море 1 noun | голубом 3 adj | ищет 1 verb
стране 2 noun | страна 2 noun | далёкой 2 adj | далёкий 2 adj | кинул 1 verb
краю 1,2 noun | край 1 noun | родном 2 adj | помню 1 verb | чудное 1,2 adj
мгновенье 2 noun | мгновение 2 noun | явилась 2 verb | явился 2 verb
мимолётное 3 adj | виденье 2 noun | гений 1 noun | гения 1 noun | чистой 1 adj
красоты 3 noun | красота 3 noun | люблю 2 verb | любил 2 verb | грозу 2 noun
гроза 2 noun | грозы 1,2 noun | начале 2 noun | начало 2 noun | мая 1 noun
май 1 noun | весенний 2 adj | первый 1 adj | гром 1 noun | резвяся 2 verb
резвясь 2 verb | играя 2 verb | грохочет 2 verb | небе 1 noun | небо 1 noun
буря 1 noun | мглою 1 noun | мгла 1 noun | кроет 1 verb | вихри 1 noun
вихрь 1 noun | снежные 1 adj | крутя 2 verb | зверь 1 noun | она 2 pron
оно 2 pron | они 2 pron | завоет 2 verb | заплачет 2 verb | дитя 2 noun
выхожу 3 verb | один 2 num | одна 2 num | одно 2 num | дорогу 2 noun
дорога 2 noun | кремнистый 2 adj | путь 1 noun | блестит 2 verb | ночь 1 noun
ночи 1 noun | тиха 2 adj | тихо 1 adv | пустыня 2 noun | внемлет 1 verb
богу 1 noun | бог 1 noun | бога 1 noun | звезда 2 noun | звезды 2 noun
звёзды 1 noun | говорит 3 verb | шёпот 1 noun | робкое 1 adj | дыханье 2 noun
трели 1 noun | трель 1 noun | соловья 3 noun | соловей 3 noun | серебро 3 noun
колыханье 3 noun | сонного 1 adj | ручья 2 noun | ручей 2 noun | тучки 1 noun
тучка 1 noun | небесные 2 adj | вечные 1 adj | странники 1 noun
странник 1 noun | степью 1 noun | степь 1 noun | лазурною 2 adj
лазурный 2 adj | цепью 1 noun | цепь 1 noun | жемчужною 2 adj
жемчужный 2 adj | мчитесь 1 verb | мчится 1 verb | изгнанники 2 noun
изгнанник 2 noun | милого 1 adj | сторону 1 noun | сторона 3 noun
южную 1 adj | южный 1 adj | ныне 1 adv | сбирается 2 verb | вещий 1 adj
олег 2 noun | олега 2 noun | отмстить 2 verb | неразумным 3 adj
неразумный 3 adj | хозарам 2 noun | хозары 2 noun | сёла 1 noun | село 2 noun
нивы 1 noun | нива 1 noun | буйный 1 adj | набег 2 noun | обрёк 2 verb
мечам 2 noun | меч 1 noun | мечи 2 noun | пожарам 2 noun | пожар 2 noun
назови 3 verb | такую 2 pron | такого 2 pron | такая 2 pron | такой 2 pron
обитель 2 noun | угла 2 noun | угол 1 noun | видал 2 verb | видала 2 verb
сеятель 1 noun | хранитель 2 noun | мужик 2 noun | стонал 2 verb
стонала 2 verb | белая 1 adj | берёза 2 noun | моим 2 pron | моя 2 pron
моей 2 pron | окном 2 noun | окно 2 noun | принакрылась 3 verb
снегом 1 noun | снег 1 noun | серебром 3 noun | сижу 2 verb | решёткой 2 noun
решётка 2 noun | темнице 2 noun | темница 2 noun | вскормлённый 2 adj
неволе 2 noun | неволя 2 noun | орёл 2 noun | орла 2 noun | молода 3 adj
товарищ 2 noun | махая 2 verb | крылом 2 noun | крыло 2 noun
кровавую 2 adj | кровавый 2 adj | пищу 1 noun | пища 1 noun | клюёт 2 verb
улица 1 noun | фонарь 2 noun | аптека 2 noun | бессмысленный 2 adj
тусклый 1 adj | свет 1 noun | живи 2 verb | живу 2 verb | четверть 1 noun
века 1,2 noun | век 1 noun | исхода 2 noun | исход 2 noun | нет 1 part
так 1 adv | умом 2 noun | ум 1 noun | россию 2 noun | россия 2 noun
понять 2 verb | аршином 2 noun | аршин 2 noun | общим 1 adj | общий 1 adj
измерить 2 verb | особенная 2 adj | особенный 2 adj | стать 1 verb
можно 1 adv | верить 1 verb | храни 2 verb | храню 2 verb | меня 2 pron
тебя 2 pron | талисман 3 noun | гоненья 2 noun | гоненье 2 noun | дни 1 noun
днём 1 noun | раскаянья 2 noun | раскаянье 2 noun | волненья 2 noun
волненье 2 noun | печали 2 noun | печаль 2 noun | дан 1 verb | дана 2 verb
унылая 2 adj | очей 2 noun | очи 1 noun | око 1 noun | очарованье 4 noun
приятна 2 adj | приятный 2 adj | твоя 2 pron | твоей 2 pron
прощальная 2 adj | прощальный 2 adj | краса 2 noun | пышное 1 adj
пышный 1 adj | природы 2 noun | природа 2 noun | увяданье 3 noun
багрец 2 noun | золото 1 noun | одетые 2 adj | одетый 2 adj | леса 1,2 noun
лес 1 noun | лесу 1,2 noun | скучно 1,2 adv | грустно 1 adv | некому 1 pron
руку 1 noun | рука 2 noun | руки 1,2 noun | подать 2 verb | минуту 2 noun
минута 2 noun | душевной 2 adj | душевный 2 adj | невзгоды 2 noun
невзгода 2 noun | желанья 2 noun | желанье 2 noun | пользы 1 noun
польза 1 noun | напрасно 2 adv | вечно 1 adv | годы 1 noun | года 1,2 noun
год 1 noun | проходят 2 verb | лучшие 1 adj | лучший 1 adj | желать 2 verb
пришёл 2 verb | пришла 2 verb | тебе 2 pron | приветом 2 noun | привет 2 noun
рассказать 3 verb | встало 1 verb | встала 1 verb | горячим 2 adj
горячий 2 adj | светом 1 noun | листам 2 noun | лист 1 noun | листы 2 noun
затрепетало 4 verb | лукоморья 3 noun | лукоморье 3 noun | дуб 1 noun
дуба 1 noun | дубе 1 noun | зелёный 2 adj | зелёная 2 adj | златая 2 adj
златой 2 adj | кот 1 noun | кота 2 noun | учёный 2 adj | скажи 2 verb
скажу 2 verb | даром 1 adv | москва 2 noun | москвы 2 noun | спалённая 2 adj
спалённый 2 adj | пожаром 2 noun | прозрачный 2 adj | чернеет 2 verb
ель 1 noun | ели 1 noun | иней 1 noun | зеленеет 3 verb
творог 1,2 noun | ворота 1,2 noun | казаки 2,3 noun | петля 1,2 noun
компас 1,2 noun | добыча 2 noun | звонит 2 verb | красивее 2 adj
искра 1 noun | щавель 2 noun | свёкла 1 noun | каталог 3 noun
документ 3 noun | портфель 2 noun | шофёр 2 noun | хвоя 1 noun
мосты 2 noun | мост 1 noun | моста 1,2 noun | зубы 1 noun | зуб 1 noun
вода 2 noun | воду 1 noun | воды 1,2 noun | нога 2 noun | ноги 1,2 noun
ногу 1 noun | голова 3 noun | голову 1 noun | головы 1,3 noun | гора 2 noun
гору 1 noun | горы 1,2 noun | земля 2 noun | землю 1 noun | земли 1,2 noun
зима 2 noun | зиму 1 noun | зимы 1,2 noun | душа 2 noun | душу 1 noun
души 1,2 noun | стена 2 noun | стену 1,2 noun | стены 1,2 noun | река 2 noun
реку 1,2 noun | реки 1,2 noun | щека 2 noun | щёку 1 noun | щёки 1 noun
спина 2 noun | спину 1 noun | окна 1,2 noun | окон 1 noun | поле 1 noun
поля 1,2 noun | полем 1 noun | слово 1 noun | слова 1,2 noun | словам 2 noun
дело 1 noun | дела 1,2 noun | тело 1 noun | тела 1,2 noun | место 1 noun
места 1,2 noun | лицо 2 noun | лица 1,2 noun | сердце 1 noun | сердца 1,2 noun
глаз 1 noun | глаза 1,2 noun | глазам 2 noun | город 1 noun | города 1,3 noun
городу 1 noun | городов 3 noun | вечер 1 noun | вечера 1,3 noun
вечером 1 noun | голос 1 noun | голоса 1,3 noun | дом 1 noun | дома 1,2 noun
дому 1,2 noun | домов 2 noun | луг 1 noun | луга 1,2 noun | снега 1,2 noun
берег 1 noun | берега 1,3 noun | столы 2 noun | стол 1 noun | стола 2 noun
столе 2 noun | друга 1 noun | друзья 2 noun | друзей 2 noun | сестра 2 noun
сестры 2 noun | сёстры 1 noun | жена 2 noun | жену 2 noun | жёны 1 noun
хлеба 1,2 noun | хлеб 1 noun | ёж 1 noun | ежа 2 noun | ежи 2 noun
ёлка 1 noun | ёлки 1 noun | ёжик 1 noun | брат 1 noun | брата 1 noun
братья 1 noun | братьев 1 noun | сосед 2 noun | соседи 2 noun | след 1 noun
следы 2 noun | следа 2 noun | летят 2 verb | летит 2 verb | лечу 2 verb
бегут 2 verb | бежит 2 verb | бегу 2 verb | несут 2 verb | несёт 2 verb
несу 2 verb | идут 2 verb | идёт 2 verb | иду 2 verb | шёл 1 verb
шла 1 verb | шли 1 verb | взял 1 verb | взяла 2 verb | взяли 1 verb
дал 1 verb | дала 2 verb | жил 1 verb | жила 2 verb | жили 1 verb
спал 1 verb | спала 2 verb | спали 1 verb | ждал 1 verb | ждала 2 verb
ждали 1 verb | звал 1 verb | звала 2 verb | звали 1 verb | брал 1 verb
брала 2 verb | брали 1 verb | начал 1 verb | начала 3 noun | начали 1 verb
понял 1 verb | поняла 3 verb | поняли 1 verb | принял 1 verb
приняла 3 verb | отдал 1,2 verb | отдала 3 verb | прочь 1 adv | вдали 2 adv
вдаль 1 adv | здесь 1 adv | там 1 adv | тут 1 adv | куда 2 adv
туда 2 adv | сюда 2 adv | утром 1 adv | всегда 2 adv | никогда 3 adv
иногда 3 adv | теперь 2 adv | сейчас 2 adv | потом 2 adv | тогда 2 adv
очень 1 adv | снова 1 adv | опять 2 adv | вновь 1 adv | вместе 1 adv
много 1 adv | немного 2 adv | мало 1 adv | едва 2 adv | почти 2 adv
совсем 2 adv | вдруг 1 adv | уже 2 adv | рано 1 adv | поздно 1 adv
быстро 1 adv | медленно 1 adv | громко 1 adv | легко 2 adv | тяжело 3 adv
хорошо 3 adv | плохо 1 adv | жаль 1 adv | нельзя 2 adv | нужно 1 adv
пусто 1 adv | светло 2 adv | темно 2 adv | тепло 2 adv | холодно 1 adv
страшно 1 adv | весело 1 adv | деревня 2 noun | деревни 2 noun
деревень 3 noun | колено 2 noun | колени 2 noun | ухо 1 noun | уши 1 noun
ушей 2 noun | плечо 2 noun | плечи 1 noun | плечам 2 noun | имя 1 noun
имени 1 noun | имена 3 noun | время 1 noun | времени 1 noun | времена 3 noun
путём 2 noun | пути 2 noun | ночью 1 noun | людей 2 noun | люди 1 noun | людям 1,2 noun
детей 2 noun | дети 1 noun | детям 1 noun | ребёнок 2 noun | человек 3 noun
человека 3 noun | волнам 2 noun | волна 2 noun | волны 1,2 noun
блеснут 2 verb | блеснул 2 verb | небесах 3 noun | небеса 3 noun
корабль 2 noun | корабля 3 noun | несётся 2 verb | парусах 3 noun
паруса 3 noun | заря 2 noun | зарю 2 noun | зори 1 noun | роса 2 noun
росу 2 noun | росы 1,2 noun | трава 2 noun | траву 2 noun | травы 1,2 noun
"""

for chunk in CORE.replace("\n", " | ").split("|"):
    chunk = chunk.strip()
    if not chunk:
        continue
    parts = chunk.split()
    word, positions = parts[0], [int(x) for x in parts[1].split(",")]
    pos_tag = parts[2] if len(parts) > 2 else ""
    flags = (pos_tag,) if pos_tag else ()
    D.add(word, positions, flags, lock=True)

# --------------------------------------------------------------------------
# Paradigm expansion, fixed-stress accent classes only.
# --------------------------------------------------------------------------

SIBILANT_VELAR = set("гкхжшчщ")
SIBILANT = set("жшчщ")


def noun_a(lemma, stress):
    """Feminine -а/-я nouns with fixed stem stress."""
    stem, last = lemma[:-1], lemma[-1]
    soft = last == "я"
    forms = {lemma}
    forms.add(stem + ("и" if (soft or stem[-1] in SIBILANT_VELAR) else "ы"))
    forms.add(stem + "е")
    forms.add(stem + ("ю" if soft else "у"))
    forms.add(stem + ("ей" if (soft or stem[-1] in SIBILANT) else "ой"))
    forms.add(stem + ("ям" if soft else "ам"))
    forms.add(stem + ("ями" if soft else "ами"))
    forms.add(stem + ("ях" if soft else "ах"))
    return [(f, stress) for f in forms]


def noun_m(lemma, stress):
    """Masculine hard-consonant nouns with fixed stem stress."""
    sib = lemma[-1] in SIBILANT
    velar = lemma[-1] in SIBILANT_VELAR
    forms = {lemma}
    for end in ("а", "у", "е", "ам", "ами", "ах"):
        forms.add(lemma + end)
    forms.add(lemma + ("ем" if sib else "ом"))
    forms.add(lemma + ("и" if velar else "ы"))
    forms.add(lemma + ("ей" if sib else "ов"))
    return [(f, stress) for f in forms]


def noun_m_soft(lemma, stress):
    """Masculine -ь/-й nouns with fixed stem stress (писатель class)."""
    stem = lemma[:-1]
    forms = {lemma}
    for end in ("я", "ю", "ем", "е", "и", "ей", "ям", "ями", "ях"):
        forms.add(stem + end)
    return [(f, stress) for f in forms]


def noun_o(lemma, stress):
    """Neuter -о nouns. End-stressed stems only get the (safe) singular;
    plurals of that class shift stress."""
    stem = lemma[:-1]
    forms = {lemma}
    for end in ("а", "у", "ом", "е"):
        forms.add(stem + end)
    if stress < n_syl(lemma):  # stem stress: plural endings stay safe
        for end in ("ам", "ами", "ах"):
            forms.add(stem + end)
    return [(f, stress) for f in forms]


def adjective(lemma, stress):
    """Stem-stressed -ый/-ий adjectives, hard and soft declensions."""
    stem = lemma[:-2]
    soft = lemma.endswith("ий") and stem[-1] not in SIBILANT_VELAR
    velar = stem[-1] in SIBILANT_VELAR
    sib = stem[-1] in SIBILANT
    forms = {lemma}
    if soft:
        for end in ("его", "ему", "им", "ем", "яя", "ей", "юю", "ее", "ие",
                    "их", "ими"):
            forms.add(stem + end)
    else:
        forms.add(stem + ("его" if sib else "ого"))
        forms.add(stem + ("ему" if sib else "ому"))
        forms.add(stem + ("им" if velar else "ым"))
        forms.add(stem + ("ем" if sib else "ом"))
        forms.add(stem + "ая")
        forms.add(stem + ("ей" if sib else "ой"))
        forms.add(stem + "ую")
        forms.add(stem + ("ее" if sib else "ое"))
        forms.add(stem + ("ие" if velar else "ые"))
        forms.add(stem + ("их" if velar else "ых"))
        forms.add(stem + ("ими" if velar else "ыми"))
    return [(f, stress) for f in forms]


def adjective_end(lemma, stress=None):
    """End-stressed -ой adjectives; stress sits on the first ending vowel."""
    stem = lemma[:-2]
    k = n_syl(stem) + 1
    velar = stem[-1] in SIBILANT_VELAR
    forms = {lemma, stem + "ого", stem + "ому", stem + ("им" if velar else "ым"),
             stem + "ом", stem + "ая", stem + "ую", stem + "ое",
             stem + ("ие" if velar else "ые"), stem + ("их" if velar else "ых"),
             stem + ("ими" if velar else "ыми")}
    return [(f, k) for f in forms]


def verb_at(lemma, stress):
    """-ать/-ять verbs of the first conjugation with stress fixed on the
    theme vowel (читать: читает, читал, читая)."""
    stem = lemma[:-2]  # keeps the theme vowel: чита-, гуля-
    forms = {lemma}
    for end in ("ю", "ешь", "ет", "ем", "ете", "ют", "л", "ла", "ло", "ли",
                "й", "йте", "я"):
        forms.add(stem + end)
    return [(f, stress) for f in forms]


def verb_it_stem(lemma, stress):
    """-ить verbs with fixed stem stress. 1sg is skipped (labial stems take
    an epenthetic л there)."""
    stem = lemma[:-3]
    sib = stem[-1] in SIBILANT
    forms = {lemma}
    for end in ("ишь", "ит", "им", "ите", "ил", "ила", "ило", "или"):
        forms.add(stem + end)
    forms.add(stem + ("ат" if sib else "ят"))
    return [(f, stress) for f in forms]


def verb_it_end(lemma, stress=None):
    """-ить verbs with fixed ending stress (говорить class)."""
    stem = lemma[:-3]
    k = n_syl(stem) + 1
    sib = stem[-1] in SIBILANT
    forms = {(lemma, k)}
    for end in ("ишь", "ит", "им", "ите", "ил", "ила", "ило", "или"):
        forms.add((stem + end, k))
    if stem[-1] not in set("бвпфм"):  # no epenthesis
        forms.add((stem + ("у" if sib else "ю"), k))
    forms.add((stem + ("ат" if sib else "ят"), k))
    return list(forms)


NOUNS_A = """
книга 1 школа 1 рама 1 мама 1 лампа 1 карта 1 парта 1 каша 1 крыша 1 буква 1
ваза 1 роза 1 осина 2 рябина 2 калина 2 малина 2 картина 2 машина 2
царица 2 птица 1 птичка 1 столица 2 граница 2 синица 2 водица 2
улыбка 2 ошибка 2 рыбка 1 лодка 1 ложка 1 кошка 1 мышка 1 шишка 1
дорожка 2 тропинка 2 снежинка 2 пушинка 2 корзина 2 долина 2 былина 2
равнина 2 вершина 2 причина 2 родина 1 погода 2 свобода 2 порода 2
забота 2 работа 2 охота 2 забава 2 держава 2 дубрава 2 отрава 2 канава 2
краска 1 сказка 1 ласка 1 маска 1 пляска 1 коляска 2 тарелка 2 стрелка 1
белка 1 дача 1 туча 1 куча 1 роща 1 чаща 1 лужа 1 кожа 1 ноша 1 каша 1
крыса 1 гитара 2 опера 1 комната 1 газета 2 ракета 2 планета 2 монета 2
котлета 2 конфета 2 палата 2 лопата 2 цитата 2 дубина 2 кабина 2
витрина 2 перина 2 смородина 3 паутина 3 плотина 2 балерина 3 сирена 2
антенна 2 солома 2 программа 2 реклама 2 панама 2 пижама 2 берлога 2
тревога 2 подруга 2 услуга 2 кольчуга 2 лачуга 2 белуга 2 фигура 2
натура 2 купюра 2 бумага 2 отвага 2 бродяга 2 коряга 2 телега 2
коллега 2 услада 2 помада 2 ограда 2 эстрада 2 лошадка 2 тетрадка 2
загадка 2 палатка 2 перчатка 2 рогатка 2 лопатка 2 заплатка 2
ромашка 2 фуражка 2 бумажка 2 подушка 2 лягушка 2 ватрушка 2 веснушка 2
избушка 2 старушка 2 погремушка 3 оса 2 коса 2 лиса 2 мечта 2 тоска 2
тропа 2 судьба 2 борьба 2 изба 2 беда 2 еда 2 дуга 2 нужда 2 вражда 2
узда 2
""".strip()
# Last two rows are end-stressed a-nouns; their oblique forms shift stress,
# so only lemma-safe forms are generated for them below.

NOUNS_A_END = {"оса", "коса", "лиса", "мечта", "тоска", "тропа", "судьба",
               "борьба", "изба", "беда", "еда", "дуга", "нужда", "вражда",
               "узда"}

NOUNS_M = """
завод 2 народ 2 огород 3 поход 2 переход 3 пароход 3 самолёт 3 вертолёт 3
теплоход 3 паровоз 3 водопад 3 виноград 3 шоколад 3 мармелад 3 салат 2
халат 2 квадрат 2 аппарат 3 автомат 3 формат 2 плакат 2 канат 2 набат 2
закат 2 рассвет 2 букет 2 билет 2 пакет 2 макет 2 секрет 2 портрет 2
кабинет 3 лазарет 3 силуэт 3 поэт 2 сонет 2 куплет 2 балет 2 обед 2
лимон 2 вагон 2 газон 2 сезон 2 фасон 2 балкон 2 флакон 2 шаблон 2
талон 2 наклон 2 поклон 2 закон 2 батон 2 бутон 2 картон 2 питон 2
бидон 2 диван 2 стакан 2 капкан 2 карман 2 банан 2 барабан 3 великан 3
океан 3 ураган 3 балаган 3 чемодан 3 сарафан 3 капитан 3 фонтан 2
каштан 2 тюльпан 2 экран 2 буран 2 курган 2 туман 2 обман 2 дурман 2
казан 2 вулкан 2 орёл?
""".replace("орёл?", "").strip()

NOUNS_M2 = """
охотник 2 работник 2 сотрудник 2 помощник 2 начальник 2 будильник 2
холодильник 3 паяльник 2 светильник 2 умывальник 3 чайник 1 садовник 2
полковник 2 сторонник 2 соперник 2 мошенник 2 племянник 2 именинник 3
путешественник 3 современник 3 предшественник 2 момент 2 цемент 2
фрагмент 2 институт 3 салют 2 маршрут 2 костюм 2 альбом 2 атом 1 метод 1
период 2 пират 2 солдат 2 адвокат 3 акробат 3 экспонат 3 аромат 3
музыкант 3 лейтенант 3 сержант 2 гигант 2 фазан 2 пейзаж 2 экипаж 3
персонаж 3 масштаб 2 штаб 1 краб 1 сугроб 2 микроб 2 небоскрёб 3
гардероб 3 мотор 2 забор 2 узор 2 позор 2 прибор 2 набор 2 разговор 3
приговор 3 коридор 3 помидор 3 мухомор 3 светофор 3 семафор 3 телефон 3
магнитофон 4 микрофон 3 патефон 3 саксофон 3 вопрос 2 запрос 2 откос 2
поднос 2 матрос 2 абрикос 3 альбатрос 3 купорос 3 пылесос 3 утёс 2
колосс 2 кокос 2 насос 2
""".strip()

NOUNS_M_SOFT = """
писатель 2 читатель 2 спасатель 2 мечтатель 2 приятель 2 строитель 2
водитель 2 любитель 2 ценитель 2 повелитель 3 избавитель 3 спаситель 2
воспитатель 3 преподаватель 4 выключатель 3 двигатель 1 показатель 3
знаменатель 3 числитель 1 зритель 1 мститель 1 житель 1 мыслитель 2
""".strip()

INDECLINABLE = """
кино 2 метро 2 пальто 2 кофе 1 радио 1 депо 2 кафе 2 пюре 2 шоссе 2 купе 2
""".strip()

# Feminine -ость/-есть abstracts: singular only (plural genitive shifts).
NOUNS_F_SOFT = """
радость 1 младость 1 сладость 1 жалость 1 шалость 1 смелость 1 гордость 1
бодрость 1 мудрость 1 щедрость 1 хитрость 1 нежность 1 верность 1
усталость 2 слабость 1 грубость 1 глупость 1 скупость 1 сырость 1
старость 1 ярость 1 благость 1 гадость 1 мерзость 1 низость 1 близость 1
узость 1 резкость 1 дерзость 1 лёгкость 1 мягкость 1 гибкость 1
робость 1 скорость 1 молодость 1 крепость 1 пакость 1 прелесть 1
свежесть 1 важность 1 влажность 1 нужность 1 южность 1 вечность 1
млечность 1 сердечность 2 беспечность 2 точность 1 прочность 1
""".strip()


def noun_f_soft(lemma, stress):
    stem = lemma[:-1]
    return [(lemma, stress), (stem + "и", stress), (stem + "ью", stress)]

NOUNS_O = """
болото 2 долото 3 корыто 2 копыто 2 сито 1 лето 1 олово 1 зарево 1
марево 1 логово 1 облако 1 яблоко 1 молоко 3 полотно 3 волокно 3 весло 2
число 2 крыльцо 2 кольцо 2 озеро 1 зеркало 1 одеяло 3 покрывало 3
правило 1 светило 2 ветрило 2 чудо 1 блюдо 1 стадо 1 гнездо 2 ведро 2
бедро 2 ядро 2 перо 2 стекло 2 сукно 2 зерно 2 пятно 2 бревно 2 ремесло 3
""".strip()

ADJECTIVES = """
красный 1 белый 1 чёрный 1 жёлтый 1 синий 1 зимний 1 летний 1 осенний 2
ранний 1 поздний 1 верхний 1 нижний 1 ближний 1 дальний 1 древний 1
вечерний 2 скромный 1 тёмный 1 светлый 1 тёплый 1 холодный 2 голодный 2
свободный 2 народный 2 походный 2 прекрасный 2 опасный 2 ужасный 2
напрасный 2 согласный 2 ясный 1 красивый 2 ленивый 2 счастливый 2
правдивый 2 учтивый 2 игривый 2 любимый 2 родимый 2 гонимый 2 новый 1
суровый 2 багровый 2 садовый 2 сосновый 2 берёзовый 2 осиновый 2
рябиновый 2 малиновый 2 старинный 2 былинный 2 пустынный 2 туманный 2
странный 1 желанный 2 верный 1 мерный 1 небесный 2 тесный 1 местный 1
грустный 1 радостный 1 сладостный 1 горестный 1 доблестный 1 известный 2
крепкий 1 редкий 1 меткий 1 чуткий 1 гибкий 1 зыбкий 1 робкий 1 громкий 1
тонкий 1 звонкий 1 ломкий 1 мягкий 1 лёгкий 1 горький 1 сладкий 1
гладкий 1 низкий 1 узкий 1 близкий 1 дерзкий 1 резкий 1 плоский 1
жёсткий 1 быстрый 1 бодрый 1 мудрый 1 щедрый 1 пёстрый 1 острый 1
хитрый 1 добрый 1 храбрый 1 старый 1 ярый 1 милый 1 смелый 1 спелый 1
целый 1 зрелый 1 унылый 2 постылый 2 тяжёлый 2 весёлый 2 тихий 1 ветхий 1
строгий 1 долгий 1 русский 1 пологий 2 отлогий 2 убогий 2 великий 2 дикий 1
главный 1 важный 1 жадный 1 складный 1 ладный 1 парадный 2 шоколадный 3
лимонадный 3 виноградный 3 отрадный 2 досадный 2 нарядный 2 опрятный 2
понятный 2 занятный 2 печатный 2 квадратный 2 богатый 2 горбатый 2
лохматый 2 усатый 2 полосатый 3 крылатый 2 рогатый 2 хвостатый 2
женатый 2 розовый 1 лиловый 2 вишнёвый 2 сиреневый 2 оранжевый 2
серебряный 2 деревянный 3 оловянный 3 стеклянный 2 кожаный 1 песчаный 2
глиняный 1 румяный 2 пряный 1 любезный 2 полезный 2 железный 2
серьёзный 2 грозный 1 слёзный 1 полный 1 дивный 1 наивный 2 активный 2
спортивный 2 массивный 2 красочный 1 сказочный 1 праздничный 1
солнечный 1 сердечный 2 месячный 1 облачный 1 мрачный 1 удачный 2
загадочный 2 махровый 2 пуховый 2
""".strip()

ADJECTIVES_END = """
большой голубой золотой молодой дорогой лесной речной ночной дневной
степной стальной льняной ржаной земной родной смешной больной немой
прямой кривой живой седой худой простой пустой крутой густой слепой
скупой тупой сырой второй шестой седьмой восьмой чужой плохой сухой
глухой лихой ледяной водяной вековой меховой боевой деловой полевой
луговой снеговой грозовой теневой огневой
""".strip()

VERBS_AT = """
читать 2 играть 2 гулять 2 мечтать 2 летать 2 вздыхать 2 мелькать 2
сверкать 2 сиять 2 гадать 2 рыдать 2 страдать 2 ожидать 3 обижать 3
обещать 3 встречать 3 отвечать 3 замечать 3 качать 2 пылать 2 блистать 2
хватать 2 шагать 2 моргать 2 сгорать 2 взлетать 2 улетать 3 отлетать 3
прилетать 3 пролетать 3 залетать 3 наступать 3 отступать 3 выступать 3
уступать 3 вступать 2 покупать 3 утопать 3 таскать 2 ласкать 2 толкать 2
порхать 2 отдыхать 3 напевать 3 запевать 3 распевать 3 воспевать 3
убегать 3 пробегать 3 забегать 3 помогать 3 сгибать 2 стирать 2
убирать 3 забирать 3 собирать 3 выбирать 3 умирать 3 замирать 3
обнимать 3 понимать 3 поднимать 3 снимать 2 внимать 2 мерцать 2
зевать 2 кивать 2 зазывать 3 называть 3 забывать 3 падать 1 прыгать 1
бегать 1 делать 1 думать 1 слушать 1 кушать 1 вешать 1 мешать 2
решать 2 вещать 2 прощать 2 пугать 2 ругать 2 мигать 2 макать 2
девать 2 успевать 3 одевать 3 надевать 3 согревать 3 затевать 3
заболевать 4 побеждать 3 наблюдать 3 обладать 3 попадать 3 совпадать 3
нападать 3 пропадать 3 заседать 3 обедать 2 приседать 3 доверять 3
повторять 3 расстилать 3 стрелять 2 терять 2 гонять 2 ронять 2 менять 2
болеть 2 жалеть 2 уметь 2 иметь 2 владеть 2 одолеть 3 краснеть 2
бледнеть 2 чернеть 2 белеть 2 темнеть 2 светлеть 2 редеть 2 седеть 2
молодеть 3 стареть 2 добреть 2 смелеть 2 робеть 2 неметь 2 тяжелеть 3
пустеть 2 густеть 2 сожалеть 3 успеть 2 зеленеть 3 синеть 2 желтеть 2
""".strip()

VERBS_IT_STEM = """
верить 1 мерить 1 клеить 1 строить 1 стоить 1 помнить 1 чистить 1
жарить 1 ставить 1 плавить 1 славить 1 грезить 1 числить 1
""".strip()

VERBS_IT_END = """
говорить спешить звонить творить сорить пылить злить гостить блестить
""".strip()


def feed(table, fn, tag, end_stressed_lemmas=frozenset()):
    tokens = table.split()
    i = 0
    while i < len(tokens):
        lemma = tokens[i]
        if i + 1 < len(tokens) and tokens[i + 1].isdigit():
            stress = int(tokens[i + 1])
            i += 2
        else:
            stress = None
            i += 1
        if lemma in end_stressed_lemmas:
            # Oblique forms shift stress; keep only the lemma itself.
            D.add(lemma, n_syl(lemma), (tag,))
            continue
        for form, k in fn(lemma, stress):
            if n_syl(form) == 0 or k > n_syl(form):
                continue
            D.add(form, k, (tag,))


feed(NOUNS_A, noun_a, "noun", NOUNS_A_END)
feed(NOUNS_M, noun_m, "noun")
feed(NOUNS_M2, noun_m, "noun")
feed(NOUNS_M_SOFT, noun_m_soft, "noun")
feed(NOUNS_O, noun_o, "noun")
feed(NOUNS_F_SOFT, noun_f_soft, "noun")
_ind = INDECLINABLE.split()
for _w, _s in zip(_ind[::2], _ind[1::2]):
    D.add(_w, int(_s), ("noun",))
feed(ADJECTIVES, adjective, "adj")
feed(ADJECTIVES_END, adjective_end, "adj")
feed(VERBS_AT, verb_at, "verb")
feed(VERBS_IT_STEM, verb_it_stem, "verb")
feed(VERBS_IT_END, verb_it_end, "verb")

# --------------------------------------------------------------------------
# Collocations where the stress leaves the noun.
# --------------------------------------------------------------------------

COLLOCATIONS = [
    ("на руки", 1, 1), ("на руку", 1, 1), ("на ноги", 1, 1), ("на ногу", 1, 1),
    ("за руку", 1, 1), ("за ноги", 1, 1), ("за город", 1, 1),
    ("за городом", 1, 1), ("под руки", 1, 1), ("на дом", 1, 1),
    ("на пол", 1, 1), ("из дому", 1, 1), ("из лесу", 1, 1), ("во поле", 1, 1),
    ("на берег", 1, 1), ("бок о бок", 2, 1), ("рука об руку", 2, 1),
]
D.add("пол", 1, ("noun",))
D.add("бок", 1, ("noun",))
D.add("бока", 1, ("noun",))

# --------------------------------------------------------------------------
# Coverage check: every Cyrillic word used by the fixtures must resolve.
# --------------------------------------------------------------------------


def fixture_words():
    words = set()
    for path in [ROOT / "tests" / "data" / "canonical_quatrains.jsonl",
                 ROOT / "tests" / "data" / "golden_fragments.jsonl"]:
        if not path.exists():
            continue
        for line in path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            rec = json.loads(line)
            for text in rec.get("lines", rec.get("text", [])):
                text = text.replace("́", "").lower()
                for w in re.findall(r"[а-яё-]+", text):
                    for part in w.strip("-").split("-"):
                        if part and n_syl(part) > 0:
                            words.add(part)
    return words


def main():
    data = ROOT / "data"
    data.mkdir(exist_ok=True)

    missing = sorted(w for w in fixture_words() if w not in D.entries)
    if missing:
        sys.exit("fixture words missing from the lexicon: " + ", ".join(missing))

    header = ("# Accent dictionary: surface<TAB>n_syllables<TAB>stress positions"
              "<TAB>flags\n# Generated by scripts/gen_lexicon.py\n")
    (data / "lexicon.tsv").write_text(header + D.dump(), encoding="utf-8")

    fw = "# Closed-class words, one per line\n" + "\n".join(
        sorted(set(FUNCTION_WORDS))) + "\n"
    (data / "function_words.txt").write_text(fw, encoding="utf-8")

    co = "# pattern<TAB>stressed word index<TAB>stress syllable\n" + "\n".join(
        f"{p}\t{i}\t{s}" for p, i, s in COLLOCATIONS) + "\n"
    (data / "collocations.tsv").write_text(co, encoding="utf-8")

    print(f"lexicon entries: {len(D.entries)}")


if __name__ == "__main__":
    main()

"""Generate the English pronunciation lexicon (g2p_lexicon.tsv).

A curated seed of frequent words with hand IPA is expanded with regular
inflections (plural, 3sg, past, -ing, comparative) using standard voicing
assimilation.  Every generated entry is validated against the segment
inventory before writing.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from clinlang.phonlex import IpaString  # noqa: E402

# word: (ipa, flags) — flags: n=noun (plural), v=verb (3sg/past/ing),
# a=adjective (comparative/superlative), ''=closed class / no inflection
SEED = {
    # articles, determiners, pronouns, prepositions, conjunctions
    "a": ("ə", ""), "an": ("ən", ""), "the": ("ðə", ""),
    "this": ("ðɪs", ""), "that": ("ðæt", ""), "these": ("ðiːz", ""),
    "those": ("ðoʊz", ""), "some": ("sʌm", ""), "any": ("ˈɛni", ""),
    "no": ("noʊ", ""), "every": ("ˈɛvri", ""), "each": ("iːtʃ", ""),
    "both": ("boʊθ", ""), "all": ("ɔːl", ""), "many": ("ˈmɛni", ""),
    "much": ("mʌtʃ", ""), "few": ("fjuː", ""), "more": ("mɔːr", ""),
    "most": ("moʊst", ""), "other": ("ˈʌðər", ""), "such": ("sʌtʃ", ""),
    "i": ("aɪ", ""), "you": ("juː", ""), "he": ("hiː", ""), "she": ("ʃiː", ""),
    "it": ("ɪt", ""), "we": ("wiː", ""), "they": ("ðeɪ", ""),
    "me": ("miː", ""), "him": ("hɪm", ""), "her": ("hɜːr", ""),
    "us": ("ʌs", ""), "them": ("ðɛm", ""), "my": ("maɪ", ""),
    "your": ("jɔːr", ""), "his": ("hɪz", ""), "its": ("ɪts", ""),
    "our": ("aʊər", ""), "their": ("ðeər", ""), "mine": ("maɪn", ""),
    "yours": ("jɔːrz", ""), "hers": ("hɜːrz", ""), "ours": ("aʊərz", ""),
    "theirs": ("ðeərz", ""), "myself": ("maɪˈsɛlf", ""),
    "himself": ("hɪmˈsɛlf", ""), "herself": ("hɜːrˈsɛlf", ""),
    "itself": ("ɪtˈsɛlf", ""), "who": ("huː", ""), "whom": ("huːm", ""),
    "whose": ("huːz", ""), "what": ("wɒt", ""), "which": ("wɪtʃ", ""),
    "when": ("wɛn", ""), "where": ("weər", ""), "why": ("waɪ", ""),
    "how": ("haʊ", ""), "in": ("ɪn", ""), "on": ("ɒn", ""), "at": ("æt", ""),
    "by": ("baɪ", ""), "for": ("fɔːr", ""), "with": ("wɪð", ""),
    "about": ("əˈbaʊt", ""), "against": ("əˈgɛnst", ""), "between": ("bɪˈtwiːn", ""),
    "into": ("ˈɪntuː", ""), "through": ("θruː", ""), "during": ("ˈdjʊərɪŋ", ""),
    "before": ("bɪˈfɔːr", ""), "after": ("ˈɑːftər", ""), "above": ("əˈbʌv", ""),
    "below": ("bɪˈloʊ", ""), "to": ("tuː", ""), "from": ("frɒm", ""),
    "up": ("ʌp", ""), "down": ("daʊn", ""), "out": ("aʊt", ""),
    "off": ("ɒf", ""), "over": ("ˈoʊvər", ""), "under": ("ˈʌndər", ""),
    "again": ("əˈgɛn", ""), "of": ("ɒv", ""), "and": ("ænd", ""),
    "or": ("ɔːr", ""), "but": ("bʌt", ""), "if": ("ɪf", ""),
    "because": ("bɪˈkɒz", ""), "as": ("æz", ""), "until": ("ʌnˈtɪl", ""),
    "while": ("waɪl", ""), "although": ("ɔːlˈðoʊ", ""), "though": ("ðoʊ", ""),
    "since": ("sɪns", ""), "unless": ("ʌnˈlɛs", ""), "so": ("soʊ", ""),
    "than": ("ðæn", ""), "too": ("tuː", ""), "very": ("ˈvɛri", ""),
    "not": ("nɒt", ""), "n't": ("n̩t", ""), "'s": ("z", ""), "'re": ("ər", ""),
    "'ve": ("əv", ""), "'ll": ("əl", ""), "'d": ("əd", ""), "'m": ("əm", ""),
    # auxiliaries and modals
    "be": ("biː", ""), "am": ("æm", ""), "is": ("ɪz", ""), "are": ("ɑːr", ""),
    "was": ("wɒz", ""), "were": ("wɜːr", ""), "been": ("biːn", ""),
    "being": ("ˈbiːɪŋ", ""), "have": ("hæv", ""), "has": ("hæz", ""),
    "had": ("hæd", ""), "having": ("ˈhævɪŋ", ""), "do": ("duː", ""),
    "does": ("dʌz", ""), "did": ("dɪd", ""), "doing": ("ˈduːɪŋ", ""),
    "done": ("dʌn", ""), "will": ("wɪl", ""), "would": ("wʊd", ""),
    "can": ("kæn", ""), "could": ("kʊd", ""), "shall": ("ʃæl", ""),
    "should": ("ʃʊd", ""), "may": ("meɪ", ""), "might": ("maɪt", ""),
    "must": ("mʌst", ""), "ought": ("ɔːt", ""),
    # frequent nouns
    "time": ("taɪm", "n"), "year": ("jɪər", "n"), "day": ("deɪ", "n"),
    "week": ("wiːk", "n"), "month": ("mʌnθ", "n"), "hour": ("aʊər", "n"),
    "minute": ("ˈmɪnɪt", "n"), "morning": ("ˈmɔːrnɪŋ", "n"),
    "night": ("naɪt", "n"), "man": ("mæn", ""), "men": ("mɛn", ""),
    "woman": ("ˈwʊmən", ""), "women": ("ˈwɪmɪn", ""),
    "child": ("tʃaɪld", ""), "children": ("ˈtʃɪldrən", ""),
    "person": ("ˈpɜːrsən", "n"), "people": ("ˈpiːpəl", ""),
    "family": ("ˈfæmɪli", "n"), "friend": ("frɛnd", "n"),
    "mother": ("ˈmʌðər", "n"), "father": ("ˈfɑːðər", "n"),
    "brother": ("ˈbrʌðər", "n"), "sister": ("ˈsɪstər", "n"),
    "son": ("sʌn", "n"), "daughter": ("ˈdɔːtər", "n"),
    "wife": ("waɪf", ""), "husband": ("ˈhʌzbənd", "n"),
    "baby": ("ˈbeɪbi", ""), "boy": ("bɔɪ", "n"), "girl": ("gɜːrl", "n"),
    "doctor": ("ˈdɒktər", "n"), "nurse": ("nɜːrs", "n"),
    "teacher": ("ˈtiːtʃər", "n"), "patient": ("ˈpeɪʃənt", "n"),
    "house": ("haʊs", "n"), "home": ("hoʊm", "n"), "room": ("ruːm", "n"),
    "kitchen": ("ˈkɪtʃɪn", "n"), "door": ("dɔːr", "n"),
    "window": ("ˈwɪndoʊ", "n"), "table": ("ˈteɪbəl", "n"),
    "chair": ("tʃeər", "n"), "bed": ("bɛd", "n"), "floor": ("flɔːr", "n"),
    "wall": ("wɔːl", "n"), "garden": ("ˈgɑːrdən", "n"),
    "street": ("striːt", "n"), "road": ("roʊd", "n"), "city": ("ˈsɪti", ""),
    "town": ("taʊn", "n"), "country": ("ˈkʌntri", ""),
    "school": ("skuːl", "n"), "hospital": ("ˈhɒspɪtəl", "n"),
    "office": ("ˈɒfɪs", "n"), "shop": ("ʃɒp", "n"), "store": ("stɔːr", "n"),
    "car": ("kɑːr", "n"), "bus": ("bʌs", "n"), "train": ("treɪn", "n"),
    "boat": ("boʊt", "n"), "plane": ("pleɪn", "n"), "bike": ("baɪk", "n"),
    "dog": ("dɒg", "n"), "cat": ("kæt", "n"), "bird": ("bɜːrd", "n"),
    "horse": ("hɔːrs", "n"), "cow": ("kaʊ", "n"), "fish": ("fɪʃ", "n"),
    "mouse": ("maʊs", ""), "animal": ("ˈænɪməl", "n"),
    "tree": ("triː", "n"), "flower": ("ˈflaʊər", "n"), "grass": ("grɑːs", "n"),
    "water": ("ˈwɔːtər", "n"), "fire": ("faɪər", "n"), "rain": ("reɪn", "n"),
    "snow": ("snoʊ", "n"), "wind": ("wɪnd", "n"), "sun": ("sʌn", "n"),
    "moon": ("muːn", "n"), "star": ("stɑːr", "n"), "sky": ("skaɪ", ""),
    "sea": ("siː", "n"), "river": ("ˈrɪvər", "n"), "hill": ("hɪl", "n"),
    "mountain": ("ˈmaʊntɪn", "n"), "field": ("fiːld", "n"),
    "food": ("fuːd", "n"), "bread": ("brɛd", "n"), "milk": ("mɪlk", "n"),
    "tea": ("tiː", "n"), "coffee": ("ˈkɒfi", "n"), "cake": ("keɪk", "n"),
    "apple": ("ˈæpəl", "n"), "egg": ("ɛg", "n"), "meat": ("miːt", "n"),
    "dinner": ("ˈdɪnər", "n"), "cookie": ("ˈkʊki", "n"),
    "cup": ("kʌp", "n"), "plate": ("pleɪt", "n"), "glass": ("glɑːs", "n"),
    "knife": ("naɪf", ""), "fork": ("fɔːrk", "n"), "spoon": ("spuːn", "n"),
    "book": ("bʊk", "n"), "page": ("peɪdʒ", "n"), "letter": ("ˈlɛtər", "n"),
    "word": ("wɜːrd", "n"), "name": ("neɪm", "n"), "story": ("ˈstɔːri", ""),
    "picture": ("ˈpɪktʃər", "n"), "paper": ("ˈpeɪpər", "n"),
    "pen": ("pɛn", "n"), "pencil": ("ˈpɛnsəl", "n"), "phone": ("foʊn", "n"),
    "money": ("ˈmʌni", "n"), "work": ("wɜːrk", "nv"), "job": ("dʒɒb", "n"),
    "hand": ("hænd", "n"), "head": ("hɛd", "n"), "eye": ("aɪ", "n"),
    "ear": ("ɪər", "n"), "nose": ("noʊz", "n"), "mouth": ("maʊθ", "n"),
    "face": ("feɪs", "n"), "hair": ("heər", "n"), "arm": ("ɑːrm", "n"),
    "leg": ("lɛg", "n"), "foot": ("fʊt", ""), "feet": ("fiːt", ""),
    "heart": ("hɑːrt", "n"), "body": ("ˈbɒdi", ""), "voice": ("vɔɪs", "n"),
    "thing": ("θɪŋ", "n"), "way": ("weɪ", "n"), "part": ("pɑːrt", "n"),
    "place": ("pleɪs", "n"), "case": ("keɪs", "n"), "fact": ("fækt", "n"),
    "group": ("gruːp", "n"), "number": ("ˈnʌmbər", "n"),
    "problem": ("ˈprɒbləm", "n"), "question": ("ˈkwɛstʃən", "n"),
    "answer": ("ˈɑːnsər", "n"), "idea": ("aɪˈdɪə", "n"),
    "reason": ("ˈriːzən", "n"), "world": ("wɜːrld", "n"),
    "life": ("laɪf", ""), "end": ("ɛnd", "n"), "side": ("saɪd", "n"),
    "game": ("geɪm", "n"), "ball": ("bɔːl", "n"), "song": ("sɒŋ", "n"),
    "music": ("ˈmjuːzɪk", "n"), "colour": ("ˈkʌlər", "n"),
    "color": ("ˈkʌlər", "n"), "sound": ("saʊnd", "n"),
    "light": ("laɪt", "n"), "box": ("bɒks", "n"), "key": ("kiː", "n"),
    "clock": ("klɒk", "n"), "watch": ("wɒtʃ", "nv"), "hat": ("hæt", "n"),
    "coat": ("koʊt", "n"), "shoe": ("ʃuː", "n"), "dress": ("drɛs", "n"),
    "shirt": ("ʃɜːrt", "n"), "bag": ("bæg", "n"), "ship": ("ʃɪp", "n"),
    "mat": ("mæt", "n"), "pot": ("pɒt", "n"), "pan": ("pæn", "n"),
    "sink": ("sɪŋk", "n"), "stool": ("stuːl", "n"), "jar": ("dʒɑːr", "n"),
    "lid": ("lɪd", "n"), "dish": ("dɪʃ", "n"), "towel": ("ˈtaʊəl", "n"),
    # frequent verbs
    "go": ("goʊ", ""), "goes": ("goʊz", ""), "went": ("wɛnt", ""),
    "gone": ("gɒn", ""), "going": ("ˈgoʊɪŋ", ""),
    "come": ("kʌm", ""), "came": ("keɪm", ""), "coming": ("ˈkʌmɪŋ", ""),
    "get": ("gɛt", ""), "got": ("gɒt", ""), "getting": ("ˈgɛtɪŋ", ""),
    "make": ("meɪk", ""), "made": ("meɪd", ""), "making": ("ˈmeɪkɪŋ", ""),
    "know": ("noʊ", ""), "knew": ("njuː", ""), "known": ("noʊn", ""),
    "think": ("θɪŋk", ""), "thought": ("θɔːt", ""),
    "take": ("teɪk", ""), "took": ("tʊk", ""), "taken": ("ˈteɪkən", ""),
    "see": ("siː", ""), "saw": ("sɔː", ""), "seen": ("siːn", ""),
    "say": ("seɪ", ""), "says": ("sɛz", ""), "said": ("sɛd", ""),
    "tell": ("tɛl", ""), "told": ("toʊld", ""),
    "give": ("gɪv", ""), "gave": ("geɪv", ""), "given": ("ˈgɪvən", ""),
    "find": ("faɪnd", ""), "found": ("faʊnd", ""),
    "leave": ("liːv", ""), "left": ("lɛft", ""),
    "feel": ("fiːl", ""), "felt": ("fɛlt", ""),
    "put": ("pʊt", ""), "keep": ("kiːp", ""), "kept": ("kɛpt", ""),
    "let": ("lɛt", ""), "begin": ("bɪˈgɪn", ""), "began": ("bɪˈgæn", ""),
    "run": ("rʌn", ""), "ran": ("ræn", ""), "running": ("ˈrʌnɪŋ", ""),
    "eat": ("iːt", ""), "ate": ("eɪt", ""), "eaten": ("ˈiːtən", ""),
    "drink": ("drɪŋk", ""), "drank": ("dræŋk", ""),
    "sit": ("sɪt", ""), "sat": ("sæt", ""), "sitting": ("ˈsɪtɪŋ", ""),
    "stand": ("stænd", ""), "stood": ("stʊd", ""),
    "sleep": ("sliːp", ""), "slept": ("slɛpt", ""),
    "speak": ("spiːk", ""), "spoke": ("spoʊk", ""),
    "read": ("riːd", ""), "write": ("raɪt", ""), "wrote": ("roʊt", ""),
    "written": ("ˈrɪtən", ""), "hear": ("hɪər", ""), "heard": ("hɜːrd", ""),
    "buy": ("baɪ", ""), "bought": ("bɔːt", ""),
    "bring": ("brɪŋ", ""), "brought": ("brɔːt", ""),
    "fall": ("fɔːl", ""), "fell": ("fɛl", ""), "fallen": ("ˈfɔːlən", ""),
    "break": ("breɪk", ""), "broke": ("broʊk", ""), "broken": ("ˈbroʊkən", ""),
    "fly": ("flaɪ", ""), "flew": ("fluː", ""),
    "swim": ("swɪm", ""), "swam": ("swæm", ""),
    "sing": ("sɪŋ", ""), "sang": ("sæŋ", ""), "sung": ("sʌŋ", ""),
    "grow": ("groʊ", ""), "grew": ("gruː", ""), "grown": ("groʊn", ""),
    "wear": ("weər", ""), "wore": ("wɔːr", ""), "worn": ("wɔːrn", ""),
    "drive": ("draɪv", ""), "drove": ("droʊv", ""),
    "ride": ("raɪd", ""), "rode": ("roʊd", ""),
    "send": ("sɛnd", ""), "sent": ("sɛnt", ""),
    "lose": ("luːz", ""), "lost": ("lɒst", ""),
    "win": ("wɪn", ""), "won": ("wʌn", ""),
    "meet": ("miːt", ""), "met": ("mɛt", ""),
    "pay": ("peɪ", ""), "paid": ("peɪd", ""),
    "hold": ("hoʊld", ""), "held": ("hɛld", ""),
    "catch": ("kætʃ", "v"), "caught": ("kɔːt", ""),
    "talk": ("tɔːk", "v"), "walk": ("wɔːk", "v"), "look": ("lʊk", "v"),
    "want": ("wɒnt", "v"), "need": ("niːd", "v"), "like": ("laɪk", "v"),
    "love": ("lʌv", "v"), "help": ("hɛlp", "v"), "play": ("pleɪ", "v"),
    "call": ("kɔːl", "v"), "ask": ("ɑːsk", "v"), "use": ("juːz", "v"),
    "try": ("traɪ", "v"), "turn": ("tɜːrn", "v"), "start": ("stɑːrt", "v"),
    "stop": ("stɒp", "v"), "open": ("ˈoʊpən", "v"), "close": ("kloʊz", "v"),
    "show": ("ʃoʊ", "v"), "move": ("muːv", "v"), "live": ("lɪv", "v"),
    "wash": ("wɒʃ", "v"), "clean": ("kliːn", "v"), "cook": ("kʊk", "v"),
    "bark": ("bɑːrk", "v"), "jump": ("dʒʌmp", "v"), "laugh": ("lɑːf", "v"),
    "cry": ("kraɪ", "v"), "smile": ("smaɪl", "v"), "point": ("pɔɪnt", "v"),
    "wait": ("weɪt", "v"), "stay": ("steɪ", "v"), "reach": ("riːtʃ", "v"),
    "pull": ("pʊl", "v"), "push": ("pʊʃ", "v"), "carry": ("ˈkæri", "v"),
    "pick": ("pɪk", "v"), "drop": ("drɒp", "v"), "fill": ("fɪl", "v"),
    "spill": ("spɪl", "v"), "pour": ("pɔːr", "v"), "dry": ("draɪ", "v"),
    "climb": ("klaɪm", "v"), "slip": ("slɪp", "v"), "fix": ("fɪks", "v"),
    "remember": ("rɪˈmɛmbər", "v"), "forget": ("fərˈgɛt", ""),
    "happen": ("ˈhæpən", "v"), "seem": ("siːm", "v"), "steal": ("stiːl", ""),
    # frequent adjectives / adverbs
    "good": ("gʊd", ""), "better": ("ˈbɛtər", ""), "best": ("bɛst", ""),
    "bad": ("bæd", ""), "worse": ("wɜːrs", ""), "worst": ("wɜːrst", ""),
    "big": ("bɪg", ""), "bigger": ("ˈbɪgər", ""), "small": ("smɔːl", "a"),
    "little": ("ˈlɪtəl", ""), "large": ("lɑːrdʒ", ""),
    "long": ("lɒŋ", "a"), "short": ("ʃɔːrt", "a"), "high": ("haɪ", "a"),
    "low": ("loʊ", "a"), "old": ("oʊld", "a"), "young": ("jʌŋ", "a"),
    "new": ("njuː", "a"), "early": ("ˈɜːrli", ""), "late": ("leɪt", ""),
    "hot": ("hɒt", ""), "cold": ("koʊld", "a"), "warm": ("wɔːrm", "a"),
    "cool": ("kuːl", "a"), "wet": ("wɛt", ""), "full": ("fʊl", "a"),
    "empty": ("ˈɛmpti", ""), "hard": ("hɑːrd", "a"), "soft": ("sɒft", "a"),
    "easy": ("ˈiːzi", ""), "heavy": ("ˈhɛvi", ""), "fast": ("fɑːst", "a"),
    "slow": ("sloʊ", "a"), "happy": ("ˈhæpi", ""), "sad": ("sæd", ""),
    "angry": ("ˈæŋgri", ""), "tired": ("ˈtaɪərd", ""), "busy": ("ˈbɪzi", ""),
    "nice": ("naɪs", ""), "fine": ("faɪn", ""), "kind": ("kaɪnd", "a"),
    "right": ("raɪt", ""), "wrong": ("rɒŋ", ""), "true": ("truː", ""),
    "real": ("rɪəl", ""), "sure": ("ʃʊər", ""), "clear": ("klɪər", "a"),
    "dark": ("dɑːrk", "a"), "bright": ("braɪt", "a"), "red": ("rɛd", ""),
    "blue": ("bluː", ""), "green": ("griːn", "a"), "yellow": ("ˈjɛloʊ", ""),
    "black": ("blæk", ""), "white": ("waɪt", ""), "brown": ("braʊn", ""),
    "grey": ("greɪ", ""), "round": ("raʊnd", "a"), "tall": ("tɔːl", "a"),
    "deep": ("diːp", "a"), "wide": ("waɪd", ""), "strong": ("strɒŋ", "a"),
    "weak": ("wiːk", "a"), "clever": ("ˈklɛvər", ""), "quiet": ("ˈkwaɪət", ""),
    "loud": ("laʊd", "a"), "pretty": ("ˈprɪti", ""), "dirty": ("ˈdɜːrti", ""),
    "next": ("nɛkst", ""), "last": ("lɑːst", ""), "first": ("fɜːrst", ""),
    "second": ("ˈsɛkənd", ""), "third": ("θɜːrd", ""), "only": ("ˈoʊnli", ""),
    "same": ("seɪm", ""), "different": ("ˈdɪfrənt", ""),
    "here": ("hɪər", ""), "there": ("ðeər", ""), "now": ("naʊ", ""),
    "then": ("ðɛn", ""), "today": ("təˈdeɪ", ""), "tomorrow": ("təˈmɒroʊ", ""),
    "yesterday": ("ˈjɛstərdeɪ", ""), "soon": ("suːn", ""),
    "always": ("ˈɔːlweɪz", ""), "never": ("ˈnɛvər", ""),
    "often": ("ˈɒfən", ""), "sometimes": ("ˈsʌmtaɪmz", ""),
    "usually": ("ˈjuːʒuəli", ""), "really": ("ˈrɪəli", ""),
    "just": ("dʒʌst", ""), "still": ("stɪl", ""), "also": ("ˈɔːlsoʊ", ""),
    "even": ("ˈiːvən", ""), "well": ("wɛl", ""), "quickly": ("ˈkwɪkli", ""),
    "slowly": ("ˈsloʊli", ""), "together": ("təˈgɛðər", ""),
    "away": ("əˈweɪ", ""), "back": ("bæk", ""), "again": ("əˈgɛn", ""),
    "once": ("wʌns", ""), "twice": ("twaɪs", ""), "almost": ("ˈɔːlmoʊst", ""),
    "already": ("ɔːlˈrɛdi", ""), "perhaps": ("pərˈhæps", ""),
    "maybe": ("ˈmeɪbi", ""), "please": ("pliːz", ""), "yes": ("jɛs", ""),
    "one": ("wʌn", ""), "two": ("tuː", ""), "three": ("θriː", ""),
    "four": ("fɔːr", ""), "five": ("faɪv", ""), "six": ("sɪks", ""),
    "seven": ("ˈsɛvən", ""), "eight": ("eɪt", ""), "nine": ("naɪn", ""),
    "ten": ("tɛn", ""), "hundred": ("ˈhʌndrəd", ""),
    # fillers and interjections
    "um": ("ʌm", ""), "uh": ("ʌ", ""), "hm": ("hm̩", ""), "mm": ("m̩", ""),
    "er": ("ɜː", ""), "erm": ("ɜːm", ""), "oh": ("oʊ", ""), "ah": ("ɑː", ""),
    "hello": ("hɛˈloʊ", ""), "goodbye": ("gʊdˈbaɪ", ""),
    "thanks": ("θæŋks", ""), "thank": ("θæŋk", "v"),
}

SIBILANTS = set("s z ʃ ʒ tʃ dʒ".split())
VOICELESS = set("p t k f θ s ʃ tʃ".split())


def final_segment(ipa):
    return IpaString.parse(ipa).segments[-1]


def plural(word, ipa):
    last = final_segment(ipa)
    if last in SIBILANTS:
        ortho = word + ("s" if word.endswith("e") else "es")
        return ortho, ipa + "ɪz"
    if word.endswith("y") and len(word) > 1 and word[-2] not in "aeiou":
        ortho = word[:-1] + "ies"
    else:
        ortho = word + "s"
    return ortho, ipa + ("s" if last in VOICELESS else "z")


def past(word, ipa):
    last = final_segment(ipa)
    if word.endswith("e"):
        ortho = word + "d"
    elif word.endswith("y") and word[-2] not in "aeiou":
        ortho = word[:-1] + "ied"
    elif _double_final(word):
        ortho = word + word[-1] + "ed"
    else:
        ortho = word + "ed"
    if last in ("t", "d"):
        return ortho, ipa + "ɪd"
    return ortho, ipa + ("t" if last in VOICELESS else "d")


def ing(word, ipa):
    if word.endswith("e") and not word.endswith("ee"):
        ortho = word[:-1] + "ing"
    elif _double_final(word):
        ortho = word + word[-1] + "ing"
    else:
        ortho = word + "ing"
    return ortho, ipa + "ɪŋ"


def comparative(word, ipa):
    if word.endswith("e"):
        ortho = word + "r"
    elif word.endswith("y") and word[-2] not in "aeiou":
        ortho = word[:-1] + "ier"
    elif _double_final(word):
        ortho = word + word[-1] + "er"
    else:
        ortho = word + "er"
    return ortho, ipa + "ər"


def _double_final(word):
    # monosyllabic CVC orthography doubles the final consonant
    return (
        len(word) >= 3
        and word[-1] not in "aeiouwxy"
        and word[-2] in "aeiou"
        and word[-3] not in "aeiou"
    )


def main():
    entries = {}
    for word, (ipa, flags) in SEED.items():
        entries[word] = ipa
        if "n" in flags:
            o, p = plural(word, ipa)
            entries.setdefault(o, p)
        if "v" in flags:
            for f in (plural, past, ing):  # 3sg shares the plural rule
                o, p = f(word, ipa)
                entries.setdefault(o, p)
        if "a" in flags:
            o, p = comparative(word, ipa)
            entries.setdefault(o, p)
            o2, p2 = o[:-1] + "st", p[:-2] + "ɪst"
            entries.setdefault(o2, p2)

    # validate every entry against the inventory
    for word, ipa in entries.items():
        segs = IpaString.parse(ipa).segments
        assert segs, word

    out = (
        Path(__file__).resolve().parents[1]
        / "src" / "clinlang" / "data" / "packs" / "en" / "g2p_lexicon.tsv"
    )
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{w}\t{p}" for w, p in sorted(entries.items())]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(entries)} entries)")


if __name__ == "__main__":
    main()

"""Generate the English tagging corpus and train the frozen pack model.

The corpus is template-generated from a tagged vocabulary (no network access
in the build environment, so no external treebank).  Sentences mix
unambiguous and ambiguous word forms; the frozen model is the averaged
perceptron trained on the full corpus with a fixed seed.
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from clinlang.morphosyntax import parse_corpus, train_tagger  # noqa: E402

VOCAB = {
    "DET": ["the", "a", "an", "this", "that", "these", "those", "some", "every",
            "each", "both", "no", "any"],
    "NOUN": ["dog", "cat", "house", "table", "garden", "window", "kitchen",
             "doctor", "teacher", "mother", "father", "sister", "brother",
             "child", "woman", "man", "book", "letter", "story", "picture",
             "car", "street", "river", "mountain", "tree", "flower", "bird",
             "horse", "water", "coffee", "dinner", "morning", "evening",
             "voice", "problem", "question", "answer", "idea", "room", "door",
             "chair", "floor", "wall", "road", "school", "hospital", "office",
             "money", "paper", "phone", "music", "song", "game", "ball",
             "hand", "head", "eye", "face", "heart", "friend", "family",
             "watch", "walk", "work", "play", "cook", "dogs", "cats", "books",
             "houses", "children", "people", "flowers", "birds", "stories",
             "pictures", "questions", "friends", "tables", "letters"],
    "VERB": ["barked", "slept", "ran", "walked", "talked", "opened", "closed",
             "washed", "cleaned", "cooked", "helped", "called", "asked",
             "answered", "watched", "played", "worked", "liked", "loved",
             "wanted", "needed", "found", "left", "took", "gave", "told",
             "saw", "heard", "made", "broke", "dropped", "carried", "pulled",
             "pushed", "filled", "poured", "jumped", "laughed", "smiled",
             "cried", "waited", "stayed", "moved", "turned", "started",
             "stopped", "reads", "writes", "sings", "runs", "walks", "talks",
             "sleeps", "barks", "plays", "works", "cooks", "watches", "helps",
             "eat", "drink", "read", "write", "sing", "run", "walk", "talk",
             "sleep", "play", "work", "cook", "watch", "help", "open",
             "close", "wash", "clean", "carry", "sat", "stood", "fell",
             "came", "went", "said", "thought", "knew", "felt"],
    "AUX": ["is", "was", "are", "were", "has", "have", "had", "will",
            "would", "can", "could", "should", "must", "may", "might",
            "does", "did", "do"],
    "ADJ": ["big", "small", "old", "young", "new", "good", "bad", "happy",
            "sad", "tall", "short", "long", "warm", "cold", "hot", "quiet",
            "loud", "bright", "dark", "clean", "dirty", "heavy", "light",
            "soft", "hard", "fast", "slow", "kind", "angry", "tired", "busy",
            "empty", "full", "green", "red", "blue", "yellow", "white",
            "black", "pretty", "strong", "weak", "clever", "little", "nice"],
    "ADV": ["quickly", "slowly", "quietly", "loudly", "happily", "sadly",
            "carefully", "suddenly", "always", "never", "often", "sometimes",
            "usually", "again", "already", "soon", "late", "early", "here",
            "there", "today", "yesterday", "together", "away", "outside",
            "inside", "well", "badly", "really", "very"],
    "PRON": ["he", "she", "it", "they", "we", "you", "i", "him", "her",
             "them", "us", "me", "who", "what", "something", "everyone",
             "nobody", "somebody"],
    "ADP": ["in", "on", "at", "under", "over", "near", "behind", "beside",
            "with", "without", "through", "into", "from", "to", "of",
            "about", "after", "before", "between", "against"],
    "CCONJ": ["and", "or", "but"],
    "SCONJ": ["because", "while", "although", "when", "if", "since",
              "until", "unless"],
    "PART": ["to", "not", "'s", "n't", "up", "off", "down"],
    "NUM": ["one", "two", "three", "four", "five", "six", "seven", "ten",
            "2", "3", "12", "100"],
    "INTJ": ["oh", "ah", "yes", "no", "well", "hello"],
    "PROPN": ["John", "Mary", "James", "Anna", "Peter", "Sarah", "David",
              "Emma", "Paris", "London", "Oslo", "Boston", "Smith",
              "Monday", "Friday", "Sunday", "June", "October"],
}

# templates: tag sequences; '?' suffix = optional (50%)
TEMPLATES = [
    "DET ADJ? NOUN VERB ADV? .",
    "DET NOUN VERB ADP DET NOUN .",
    "PRON AUX VERB DET ADJ? NOUN .",
    "PROPN VERB ADP DET NOUN .",
    "DET NOUN AUX ADV? ADJ .",
    "PRON VERB DET NOUN CCONJ DET NOUN .",
    "SCONJ PRON VERB , DET NOUN VERB ADV .",
    "PROPN CCONJ PROPN VERB ADP PROPN .",
    "DET ADJ NOUN AUX VERB ADP NUM NOUN .",
    "PRON AUX PART VERB DET NOUN .",
    "INTJ , PRON AUX ADJ .",
    "DET NOUN 's NOUN AUX ADJ .",
    "ADV , DET NOUN VERB .",
    "PRON AUX n't VERB DET NOUN .",
    "DET NOUN VERB SCONJ DET NOUN VERB .",
    "PROPN AUX DET ADJ NOUN .",
    "NUM NOUN VERB ADP DET NOUN .",
    "PRON VERB PROPN ADP PROPN .",
    "DET ADJ ADJ NOUN VERB .",
    "PRON ADV VERB DET NOUN .",
]


def generate(n_sentences: int, seed: int) -> list[list[tuple[str, str]]]:
    rng = random.Random(seed)
    sentences = []
    for _ in range(n_sentences):
        template = rng.choice(TEMPLATES).split()
        sent = []
        for slot in template:
            optional = slot.endswith("?")
            tag = slot.rstrip("?")
            if optional and rng.random() < 0.5:
                continue
            if tag == ".":
                sent.append((rng.choice([".", ".", ".", "!", "?"]), "PUNCT"))
            elif tag == ",":
                sent.append((",", "PUNCT"))
            elif tag == "'s":
                sent.append(("'s", "PART"))
            elif tag == "n't":
                sent.append(("n't", "PART"))
            else:
                word = rng.choice(VOCAB[tag])
                if not sent and word.islower() and tag != "PROPN":
                    word = word.capitalize()
                sent.append((word, tag))
        sentences.append(sent)
    return sentences


def main():
    sentences = generate(800, seed=20240301)
    n_tokens = sum(len(s) for s in sentences)
    lines = []
    for sent in sentences:
        for w, t in sent:
            lines.append(f"{w}\t{t}")
        lines.append("")
    corpus_text = "\n".join(lines) + "\n"

    root = Path(__file__).resolve().parents[1] / "src" / "clinlang" / "data" / "packs" / "en"
    (root / "tagger_corpus.tsv").write_text(corpus_text, encoding="utf-8")
    print(f"wrote corpus: {n_tokens} tokens, {len(sentences)} sentences")

    parsed = parse_corpus(corpus_text)
    # held-out check mirrors the acceptance criterion
    split = int(len(parsed) * 0.9)
    model = train_tagger(parsed[:split], epochs=8, seed=7)
    correct = total = 0
    for sent in parsed[split:]:
        words = [w for w, _ in sent]
        pred = model.tag_sentence(words)
        for (w, gold), p in zip(sent, pred):
            total += 1
            correct += gold == p
    print(f"held-out accuracy: {correct / total:.4f} ({correct}/{total})")

    full = train_tagger(parsed, epochs=8, seed=7)
    full.save(root / "tagger.model")
    print(f"wrote model: {len(full.weights)} features")


if __name__ == "__main__":
    main()

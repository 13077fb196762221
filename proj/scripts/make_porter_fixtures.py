"""Regenerate the frozen Porter stemmer fixtures in tests/data/.

The expected stems come from NLTK's PorterStemmer in ORIGINAL_ALGORITHM
mode, an implementation independent of ours. Inflection pairs are drawn
from the CMU dictionary word list shipped with the `cmudict` package.

    pip install nltk cmudict
    python scripts/make_porter_fixtures.py
"""
import pathlib

import cmudict
from nltk.stem.porter import PorterStemmer

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"

WORDS = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization
predication operator feudalism decisiveness hopefulness callousness
formaliti sensitiviti sensibiliti triplicate formative formalize electriciti
electrical hopeful goodness revival allowance inference airliner gyroscopic
adjustable defensible irritant replacement adjustment dependent adoption
homologou communism activate angulariti homologous effective bowdlerize
probate rate cease controll roll generalizations oscillators significant
significance president absolutely announced agreement affairs sunderkand
vice generously running national nationality organization organizational
connection connections connective connected connecting hopelessness
skies dying
""".split()


def main():
    stemmer = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)
    words = list(dict.fromkeys(WORDS))[:100]
    assert len(words) == 100, len(words)
    with open(OUT / "porter_words.tsv", "w") as f:
        f.write("# word<TAB>stem, NLTK PorterStemmer ORIGINAL_ALGORITHM\n")
        for w in words:
            f.write(f"{w}\t{stemmer.stem(w)}\n")

    vocab = {w for w in cmudict.words() if w.isalpha() and w.islower()}
    chosen = []
    for suffix, quota in (("s", 34), ("ed", 33), ("ing", 33)):
        pairs = []
        for base in sorted(vocab):
            form = base + suffix
            if len(base) >= 4 and form in vocab and stemmer.stem(base) == stemmer.stem(form):
                pairs.append((base, form, stemmer.stem(base)))
        chosen += pairs[:: len(pairs) // quota][:quota]
    with open(OUT / "porter_inflections.tsv", "w") as f:
        f.write("# base<TAB>inflected<TAB>shared stem, NLTK PorterStemmer ORIGINAL_ALGORITHM\n")
        for base, form, stem in chosen:
            f.write(f"{base}\t{form}\t{stem}\n")


if __name__ == "__main__":
    main()

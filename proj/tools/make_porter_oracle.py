#!/usr/bin/env python3
"""Writes word<TAB>stem pairs from NLTK's Porter stemmer in original-algorithm
mode, over the alphabetic vocabulary of the given text files."""

import pathlib
import re
import sys

from nltk.stem.porter import PorterStemmer


def main():
    out = pathlib.Path(sys.argv[1])
    words = set()
    for arg in sys.argv[2:]:
        for path in pathlib.Path(".").glob(arg):
            text = path.read_text(errors="ignore").lower()
            words.update(w for w in re.findall(r"[a-z]+", text) if len(w) <= 20)
    stemmer = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)
    with out.open("w") as f:
        for w in sorted(words):
            f.write(f"{w}\t{stemmer.stem(w, to_lowercase=False)}\n")


if __name__ == "__main__":
    main()

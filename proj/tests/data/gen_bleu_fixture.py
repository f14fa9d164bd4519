#!/usr/bin/env python3
# Copyright 2026 The hausanoise Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Freezes reference BLEU values from sacrebleu for the C++ oracle tests.

Generates 100 random noisy/clean sentence pairs (Hausa-like words, with
punctuation, digits, hyphens and HTML entities to exercise the 13a
tokenizer) and records sacrebleu's corpus BLEU for the full set, for random
subsets, and for every single pair. Run once; the output is committed.

    python3 tests/data/gen_bleu_fixture.py > tests/data/bleu_oracle.json
"""

import json
import random
import sys

import sacrebleu

EXPECTED_SIGNATURE = "nrefs:1|case:mixed|eff:no|tok:13a|smooth:exp|version:2.6.0"

WORDS = (
    "da a ba ya na ta wani ne ce kuma shi ita su mu ku ni ka ki sun zai za don "
    "amma idan cikin daga zuwa game kan har yana tana suna muna ake aka wanda "
    "wannan nan can yanzu gobe jiya yau lokaci shekara gida ƙasa ƙasar ruwa "
    "abinci makaranta yara mutane sarki gwamnati jihar kasuwa aiki kuɗi hanya "
    "mota labari magana Hausa Kano Katsina Najeriya Allah ranar ɗaya biyu uku "
    "daɗi ɓata ɗan 'yan ƴaƴa ƙarshe farko ɓangare ƙungiya lafiya likita noma"
).split()
EXTRAS = ["17", "3.5", "1,000", "2026-10-16", "e-mail", "&amp;", "&quot;ok&quot;",
          "(Kano)", "[3]", "A/B", "x+y", "50%", "#Hausa", "@user", "U.S.A.", "ɗan-uwa"]
PUNCT = ["", "", "", "", ".", ",", "?", "!", ":", ";"]
ALPHABET = "abcdefghijklmnopqrstuvwxyzɓɗƙƴ'"


def sentence(rng):
    n = rng.randint(1, 24)
    toks = []
    for _ in range(n):
        tok = rng.choice(EXTRAS) if rng.random() < 0.08 else rng.choice(WORDS)
        toks.append(tok + rng.choice(PUNCT))
    toks[0] = toks[0][:1].upper() + toks[0][1:]
    return " ".join(toks)


def corrupt(rng, s, rate):
    out = []
    chars = list(s)
    i = 0
    while i < len(chars):
        c = chars[i]
        r = rng.random()
        if r < rate:
            pass  # delete
        elif r < 2 * rate:
            out.append(c + c)
        elif r < 3 * rate:
            out.append(rng.choice(ALPHABET))
        elif r < 4 * rate and i + 1 < len(chars):
            out.append(chars[i + 1] + c)
            i += 1
        elif c == " " and rng.random() < 0.15:
            pass  # merge words
        else:
            out.append(c)
        i += 1
    return "".join(out)


METRIC = sacrebleu.BLEU()


def bleu(refs, hyps):
    return METRIC.corpus_score(hyps, [refs]).score / 100.0


def main():
    rng = random.Random(20261016)
    pairs = []
    for k in range(100):
        ref = sentence(rng)
        mode = rng.random()
        if mode < 0.05:
            hyp = ref
        elif mode < 0.08:
            hyp = ""
        elif mode < 0.12:
            hyp = sentence(rng)  # unrelated
        else:
            hyp = corrupt(rng, ref, rng.choice([0.01, 0.03, 0.06, 0.12]))
        pairs.append({"ref": ref, "hyp": hyp})

    refs = [p["ref"] for p in pairs]
    hyps = [p["hyp"] for p in pairs]
    corpus_score = bleu(refs, hyps)
    signature = str(METRIC.get_signature())
    if signature != EXPECTED_SIGNATURE:
        sys.exit(f"unexpected scorer signature {signature!r}")

    subsets = []
    for _ in range(30):
        size = rng.randint(1, 40)
        idx = sorted(rng.sample(range(100), size))
        subsets.append({"indices": idx,
                        "bleu": bleu([refs[i] for i in idx], [hyps[i] for i in idx])})

    doc = {
        "signature": signature,
        "pairs": pairs,
        "corpus_bleu": corpus_score,
        "subsets": subsets,
        "single_pair_bleu": [bleu([r], [h]) for r, h in zip(refs, hyps)],
        "tokenized_13a": [
            {"line": line, "tokens": sacrebleu.tokenizers.tokenizer_13a.Tokenizer13a()(line).split()}
            for line in refs[:20] + hyps[:20]
        ],
    }
    json.dump(doc, sys.stdout, ensure_ascii=False, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()

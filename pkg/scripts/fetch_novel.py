#!/usr/bin/env python3
"""Download the public-domain text of Seitseman veljesta (Aleksis Kivi)
from Project Gutenberg and strip the license boilerplate, leaving the
novel body for the word-frequency reproduction test.

Needs ordinary internet access.  Writes data/seitseman_veljesta.txt by
default; point the word-frequency test at another location with the
DPLFIT_NOVEL environment variable.
"""

import argparse
import sys
import urllib.request
from pathlib import Path

EBOOK_URLS = [
    "https://www.gutenberg.org/cache/epub/11940/pg11940.txt",
    "https://www.gutenberg.org/files/11940/11940-8.txt",
]
START_MARK = "*** START OF"
END_MARK = "*** END OF"


def strip_gutenberg_boilerplate(text):
    lines = text.splitlines()
    start = next((i + 1 for i, l in enumerate(lines) if l.startswith(START_MARK)), 0)
    end = next((i for i, l in enumerate(lines) if l.startswith(END_MARK)), len(lines))
    return "\n".join(lines[start:end]).strip() + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data/seitseman_veljesta.txt")
    args = parser.parse_args()

    data = None
    for url in EBOOK_URLS:
        try:
            req = urllib.request.Request(url, headers={"User-Agent": "dplfit-fetch"})
            data = urllib.request.urlopen(req, timeout=60).read()
            print(f"fetched {len(data)} bytes from {url}")
            break
        except OSError as err:
            print(f"could not fetch {url}: {err}", file=sys.stderr)
    if data is None:
        print("all mirrors failed; is network access available?", file=sys.stderr)
        return 1

    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        text = data.decode("latin-1")
    body = strip_gutenberg_boilerplate(text)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(body, encoding="utf-8")
    print(f"wrote {out} ({len(body)} characters)")
    return 0


if __name__ == "__main__":
    sys.exit(main())

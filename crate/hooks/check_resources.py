"""Resource checks the Android asset packager would fail on.

Every XML file must be well formed, and string resources must not contain
unescaped apostrophes outside double quotes. Prints one line per problem and
exits 1 if there is any.
"""

import os
import sys
import xml.etree.ElementTree as ET

SKIP_DIRS = {"build", "bin", ".git"}


def unescaped_apostrophe(text):
    quoted = False
    escaped = False
    for ch in text:
        if escaped:
            escaped = False
        elif ch == "\\":
            escaped = True
        elif ch == '"':
            quoted = not quoted
        elif ch == "'" and not quoted:
            return True
    return False


def check_strings(path, root, problems):
    for el in root.iter("string"):
        text = "".join(el.itertext())
        if unescaped_apostrophe(text):
            problems.append(f"{path}: string '{el.get('name')}': apostrophe not preceded by \\")


def main(top):
    problems = []
    for dirpath, dirnames, filenames in os.walk(top):
        dirnames[:] = sorted(d for d in dirnames if d not in SKIP_DIRS)
        for name in sorted(filenames):
            if not name.endswith(".xml"):
                continue
            path = os.path.join(dirpath, name)
            try:
                root = ET.parse(path).getroot()
            except ET.ParseError as e:
                problems.append(f"{path}: {e}")
                continue
            if os.path.basename(dirpath).startswith("values"):
                check_strings(path, root, problems)
    for p in problems:
        print(p)
    return 1 if problems else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1] if len(sys.argv) > 1 else "."))

import os

OUT = os.environ.get("SPINTUNNEL_OUTDIR", os.path.join(os.path.dirname(__file__), "output"))
os.makedirs(OUT, exist_ok=True)


def save(name, text):
    path = os.path.join(OUT, name)
    with open(path, "w", newline="") as fh:
        fh.write(text)
    print(f"  wrote {path}")

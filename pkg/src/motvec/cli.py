"""Single command-line entry point for the whole pipeline.

Exit codes: 0 success, 1 usage error, 2 runtime error.  Every subcommand
accepts --seed and --json; `--json` alone prints machine-readable output
to stdout, `--json PATH` writes it to a file.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from motvec import analogy as analogy_mod
from motvec import nlu, query, trainer, viz
from motvec.corpus import build_profile, dedup_corpus, default_profiles, extract_corpus
from motvec.errors import MotvecError
from motvec.service import ServerConfig, serve
from motvec.store import load_embeddings, normalize, save_embeddings


def _emit(payload: dict, json_out: str | None, human: str | None = None):
    text = json.dumps(payload, sort_keys=True, ensure_ascii=False)
    if json_out == "-":
        click.echo(text)
    elif json_out:
        Path(json_out).write_text(text + "\n", encoding="utf-8")
        if human:
            click.echo(human)
    elif human is not None:
        click.echo(human)
    else:
        click.echo(text)


def common_options(fn):
    fn = click.option(
        "--json",
        "json_out",
        is_flag=False,
        flag_value="-",
        default=None,
        help="Emit JSON (to stdout, or to the given path).",
    )(fn)
    fn = click.option("--seed", type=int, default=1, show_default=True)(fn)
    return fn


@click.group()
def cli():
    """Build corpora, train CBoW vectors, evaluate and explore them."""


@cli.command("extract")
@click.option("--in", "inputs", multiple=True, required=True, type=click.Path())
@click.option("--lang", default="fr", show_default=True)
@click.option("--min-conf", default=0.5, show_default=True)
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--min-line-chars", default=30, show_default=True)
@click.option(
    "--profile",
    "profile_specs",
    multiple=True,
    help="tag=sample.txt; builds a language profile from a sample file "
    "(default: built-in fr/en profiles).",
)
@common_options
def extract_cmd(inputs, lang, min_conf, out_dir, min_line_chars, profile_specs, json_out, seed):
    """Extract text from WARC/plain files into language-filtered shards."""
    if profile_specs:
        profiles = []
        for spec_item in profile_specs:
            tag, _, sample = spec_item.partition("=")
            if not sample:
                raise click.UsageError("--profile expects tag=sample.txt")
            profiles.append(build_profile(Path(sample).read_text(encoding="utf-8"), tag))
    else:
        profiles = default_profiles()
    stats = extract_corpus(
        list(inputs),
        out_dir,
        language=lang,
        min_confidence=min_conf,
        profiles=profiles,
        min_line_chars=min_line_chars,
    )
    print(stats.to_json(), file=sys.stderr)
    _emit(json.loads(stats.to_json()), json_out, human=f"extracted into {out_dir}")


@cli.command("dedup")
@click.option("--in", "in_dir", required=True, type=click.Path())
@click.option("--out", "out_dir", required=True, type=click.Path())
@common_options
def dedup_cmd(in_dir, out_dir, json_out, seed):
    """Drop duplicate lines across all shards of a directory."""
    stats = dedup_corpus(in_dir, out_dir)
    print(stats.to_json(), file=sys.stderr)
    _emit(json.loads(stats.to_json()), json_out, human=f"deduplicated into {out_dir}")


@cli.command("train")
@click.option("--corpus", required=True, type=click.Path())
@click.option("--dim", default=300, show_default=True)
@click.option("--window", default=5, show_default=True)
@click.option("--min-count", default=5, show_default=True)
@click.option("--negatives", default=5, show_default=True)
@click.option("--epochs", default=5, show_default=True)
@click.option("--lr", "lr_start", default=0.025, show_default=True)
@click.option("--lr-end", default=1e-4, show_default=True)
@click.option("--subsample", "subsample_t", default=1e-3, show_default=True)
@click.option("--workers", default=None, type=int, help="Defaults to logical cores.")
@click.option("--out", "out_path", required=True, type=click.Path())
@common_options
def train_cmd(
    corpus, dim, window, min_count, negatives, epochs, lr_start, lr_end,
    subsample_t, workers, out_path, json_out, seed,
):
    """Train CBoW vectors with negative sampling."""
    config = trainer.TrainingConfig(
        dim=dim, window=window, min_count=min_count, negatives=negatives,
        epochs=epochs, lr_start=lr_start, lr_end=lr_end,
        subsample_t=subsample_t, seed=seed,
    )
    if workers is None:
        workers = os.cpu_count() or 1
    emb = trainer.train(corpus, config, workers=workers, log_every=1.0)
    save_embeddings(emb, out_path)
    _emit(
        {"model": str(out_path), "vocab": len(emb.vocab), "dim": emb.dim},
        json_out,
        human=f"saved {len(emb.vocab)} x {emb.dim} vectors to {out_path}",
    )


@cli.command("convert")
@click.option("--in", "in_path", required=True, type=click.Path())
@click.option("--out", "out_path", required=True, type=click.Path())
@common_options
def convert_cmd(in_path, out_path, json_out, seed):
    """Convert between the text (.vec) and binary (.bin) formats."""
    emb = load_embeddings(in_path)
    save_embeddings(emb, out_path)
    _emit(
        {"in": str(in_path), "out": str(out_path), "vocab": len(emb.vocab), "dim": emb.dim},
        json_out,
        human=f"wrote {out_path}",
    )


def _load_view(model_path: str):
    emb = load_embeddings(model_path)
    return emb, normalize(emb)


@cli.command("analogy")
@click.option("--model", required=True, type=click.Path())
@click.option("--questions", required=True, type=click.Path())
@click.option("--candidate-limit", type=int, default=None)
@common_options
def analogy_cmd(model, questions, candidate_limit, json_out, seed):
    """Score a model on a Mikolov-format analogy question file."""
    _, view = _load_view(model)
    report = analogy_mod.evaluate(
        view, analogy_mod.parse_questions(questions), candidate_limit=candidate_limit
    )
    human = (
        f"accuracy {report.accuracy:.4f} "
        f"({report.correct}/{report.attempted} attempted, {report.skipped_oov} skipped)"
    )
    _emit(report.to_dict(), json_out, human=human)


@cli.command("sim")
@click.option("--model", required=True, type=click.Path())
@click.argument("w1")
@click.argument("w2")
@common_options
def sim_cmd(model, w1, w2, json_out, seed):
    """Cosine similarity between two words."""
    _, view = _load_view(model)
    value = query.cosine(view, w1, w2)
    _emit({"w1": w1, "w2": w2, "cosine": value}, json_out, human=f"{value:.5f}")


@cli.command("nn")
@click.option("--model", required=True, type=click.Path())
@click.option("--k", default=10, show_default=True)
@click.argument("word")
@common_options
def nn_cmd(model, k, word, json_out, seed):
    """Top-k most similar words."""
    _, view = _load_view(model)
    results = query.neighbors(view, word, k=k)
    human = "\n".join(f"{w}\t{s:.5f}" for w, s in results)
    _emit(
        {"word": word, "results": [{"word": w, "score": s} for w, s in results]},
        json_out,
        human=human,
    )


@cli.command("viz")
@click.option("--model", required=True, type=click.Path())
@click.option("--word", required=True)
@click.option("--n", default=200, show_default=True)
@click.option("--k", default=8, show_default=True)
@click.option("--out", "out_path", type=click.Path(), default=None)
@common_options
def viz_cmd(model, word, n, k, out_path, json_out, seed):
    """t-SNE + k-means cluster plot JSON for a word's neighborhood."""
    _, view = _load_view(model)
    plot = viz.build_plot(view, viz.VizRequest(word=word, n=n, k=k, seed=seed))
    payload = plot.to_dict()
    if out_path:
        Path(out_path).write_text(json.dumps(payload, ensure_ascii=False), encoding="utf-8")
        _emit(payload, json_out, human=f"wrote {out_path}")
    else:
        _emit(payload, json_out)


@cli.command("probe")
@click.option("--model", required=True, type=click.Path())
@click.option("--train", "train_tsv", required=True, type=click.Path())
@click.option("--test", "test_tsv", required=True, type=click.Path())
@click.option("--epochs", default=200, show_default=True)
@click.option("--lr", default=1.0, show_default=True)
@click.option("--compare-random", is_flag=True, default=False)
@common_options
def probe_cmd(model, train_tsv, test_tsv, epochs, lr, compare_random, json_out, seed):
    """Train/evaluate the bag-of-embeddings sentiment probe on TSV data."""
    emb, _ = _load_view(model)
    train_set = _read_tsv(train_tsv)
    test_set = _read_tsv(test_tsv)
    probe = nlu.train_probe(train_set, emb, epochs=epochs, lr=lr, seed=seed)
    accuracy = nlu.evaluate_probe(probe, test_set, emb)
    payload: dict = {"accuracy": accuracy}
    if compare_random:
        import numpy as np

        rng = np.random.default_rng(seed)
        random_matrix = (rng.random(emb.input_vectors.shape) - 0.5) / emb.dim
        random_emb = trainer.EmbeddingSet(emb.vocab, random_matrix)
        random_probe = nlu.train_probe(train_set, random_emb, epochs=epochs, lr=lr, seed=seed)
        payload["baselineRandomAccuracy"] = nlu.evaluate_probe(
            random_probe, test_set, random_emb
        )
    _emit(payload, json_out)


def _read_tsv(path: str) -> list[tuple[int, list[str]]]:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            label, sep, sentence = line.partition("\t")
            if not sep:
                raise MotvecError(f"{path}:{lineno}: expected label<TAB>sentence")
            rows.append((int(label), sentence.split()))
    return rows


@cli.command("serve")
@click.option("--config", "config_path", required=True, type=click.Path())
@common_options
def serve_cmd(config_path, json_out, seed):
    """Run the explorer HTTP API from a JSON config."""
    serve(ServerConfig.from_file(config_path))


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.ClickException as exc:
        exc.show()
        return 2
    except click.exceptions.Abort:
        return 2
    except (MotvecError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

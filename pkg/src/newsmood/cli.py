"""Command-line pipeline: ingest, score, train, evaluate, simulate, serve."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import agent, corpus, eda, evaluation, figures, hybrid, pipeline
from ._data import DataIntegrityError
from .lexicons import SentimentLabel


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="input", metavar="CSV", default=None,
                        help="corpus CSV (default: bundled mini corpus)")


def _add_rl_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", help="trained classifier JSON "
                        "(default: train one in memory)")
    parser.add_argument("--steps", type=int, default=200_000)
    parser.add_argument("--alpha", type=float, default=0.1)
    parser.add_argument("--gamma", type=float, default=0.9)
    parser.add_argument("--epsilon-start", type=float, default=1.0)
    parser.add_argument("--epsilon-end", type=float, default=0.05)
    parser.add_argument("--tau", type=int, default=1000,
                        help="visit-count step-size decay scale (0 disables)")
    parser.add_argument("--reward-p", type=float, default=0.5,
                        help="bonus for delivering positive content")
    parser.add_argument("--reward-c", type=float, default=0.3,
                        help="bonus for matching the current mood")
    parser.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newsmood",
        description="Sentiment-scored news recommendation pipeline")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load a corpus and write its processed form")
    _add_input(p)
    p.add_argument("--out", required=True, help="processed corpus CSV")

    p = sub.add_parser("score", help="append scorer columns and labels to a corpus")
    _add_input(p)
    p.add_argument("--out", required=True, help="scored corpus CSV")
    p.add_argument("--no-figures", action="store_true")

    p = sub.add_parser("train-hybrid", help="train the fused classifier")
    _add_input(p)
    p.add_argument("--model", required=True, help="output model JSON")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--test-fraction", type=float, default=0.2)
    p.add_argument("--max-iter", type=int, default=200)

    p = sub.add_parser("eval", help="tool-vs-model comparison on the test split")
    _add_input(p)
    p.add_argument("--model", required=True, help="trained model JSON")
    p.add_argument("--out", required=True, help="report JSON path")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--test-fraction", type=float, default=0.2)
    p.add_argument("--no-figures", action="store_true")

    p = sub.add_parser("train-rl", help="train the tabular agent on the simulator")
    _add_input(p)
    _add_rl_flags(p)
    p.add_argument("--qtable", required=True, help="output Q-table JSON")
    p.add_argument("--no-figures", action="store_true")

    p = sub.add_parser("simulate", help="train the agent and print the result")
    _add_input(p)
    _add_rl_flags(p)
    p.add_argument("--qtable", help="optionally persist the Q-table JSON")
    p.add_argument("--no-figures", action="store_true")

    p = sub.add_parser("eda", help="TF-IDF matrix for selected documents")
    _add_input(p)
    p.add_argument("--out", required=True, help="term-weight matrix CSV")
    p.add_argument("--docs", default=None,
                   help="comma-separated article ids (default: first 10)")
    p.add_argument("--max-vocab", type=int, default=500)
    p.add_argument("--top", type=int, default=25,
                   help="number of highest-weight terms kept as columns")
    p.add_argument("--no-figures", action="store_true")

    p = sub.add_parser("serve", help="run the live-session HTTP service")
    _add_input(p)
    p.add_argument("--model", help="trained model JSON (default: train in memory)")
    p.add_argument("--qtable", help="trained Q-table JSON (default: zero table)")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", default="frontend/dist", help="static UI directory")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--gamma", type=float, default=0.9)
    return parser


def _train_model(scored: pipeline.ScoredCorpus, seed: int,
                 test_fraction: float = 0.2, max_iter: int = 200):
    rows = scored.non_tie_rows
    train_rows, test_rows = hybrid.stratified_split(rows, test_fraction, seed)
    config = hybrid.TrainConfig(max_iter=max_iter, seed=seed)
    model = hybrid.train(train_rows, config)
    return model, train_rows, test_rows


def _load_or_train_model(args, scored: pipeline.ScoredCorpus):
    if getattr(args, "model", None):
        path = Path(args.model)
        if path.is_file():
            return hybrid.load_model(path)
        raise FileNotFoundError(f"model file not found: {path}")
    model, _, _ = _train_model(scored, getattr(args, "seed", 0))
    return model


def cmd_ingest(args) -> int:
    articles, skipped = corpus.load_corpus(args.input or pipeline.bundled_corpus_path())
    processed = corpus.preprocess_corpus(articles)
    corpus.write_processed_csv(args.out, articles, processed)
    print(f"wrote {args.out}: {len(articles)} articles "
          f"({skipped} skipped for empty description)")
    return 0


def cmd_score(args) -> int:
    scored = pipeline.load_and_score(args.input)
    out = Path(args.out)
    with out.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["id", "title", "pubDate", "guid", "link", "description",
                         "clean_text", "tokens",
                         "vader_compound", "textblob_polarity", "afinn_raw",
                         "afinn_norm", "swn_score",
                         "vader_label", "textblob_label", "afinn_label",
                         "swn_label", "consensus"])
        for article, proc, scores, row in zip(scored.articles, scored.processed,
                                              scored.scores, scored.rows):
            consensus = row.consensus.name if row.consensus is not None else "Tie"
            writer.writerow([
                article.id, article.title, article.pub_date, article.guid,
                article.link, article.description, proc.clean_text,
                " ".join(proc.tokens),
                repr(scores.vader_compound), repr(scores.textblob_polarity),
                scores.afinn_raw, repr(scores.afinn_norm),
                repr(scores.swn_score),
                *(label.name for label in row.tool_labels), consensus])
    print(f"wrote {out}: {len(scored.articles)} scored articles "
          f"({scored.skipped} skipped)")
    if not args.no_figures:
        fig = figures.score_histograms([s.feature_vector() for s in scored.scores],
                                       out.with_name(out.stem + "_distributions.png"))
        print(f"wrote {fig}")
    return 0


def cmd_train_hybrid(args) -> int:
    scored = pipeline.load_and_score(args.input)
    model, train_rows, test_rows = _train_model(
        scored, args.seed, args.test_fraction, args.max_iter)
    hybrid.save_model(model, args.model)
    meta = model.training_meta
    print(f"wrote {args.model}: trained on {len(train_rows)} rows "
          f"({len(test_rows)} held out, {len(scored.rows) - len(scored.non_tie_rows)} "
          f"ties excluded), {meta['iterations']} iterations, "
          f"final loss {meta['final_loss']:.6f}")
    return 0


def cmd_eval(args) -> int:
    scored = pipeline.load_and_score(args.input)
    model = hybrid.load_model(args.model)
    _, test_rows = hybrid.stratified_split(scored.non_tie_rows,
                                           args.test_fraction, args.seed)
    comparison = evaluation.compare_tools(scored.rows, model, test_rows)
    out = Path(args.out)
    out.write_text(json.dumps(evaluation.comparison_to_dict(comparison), indent=2)
                   + "\n", encoding="utf-8")
    table = evaluation.render_comparison(comparison)
    out.with_suffix(".txt").write_text(table, encoding="utf-8")
    print(table, end="")
    print(f"wrote {out} and {out.with_suffix('.txt')}")
    if not args.no_figures:
        truth = [r.consensus for r in test_rows]
        predicted = [hybrid.predict(model, r.features) for r in test_rows]
        fig1 = figures.confusion_heatmap(
            evaluation.confusion(truth, predicted),
            out.with_name(out.stem + "_confusion_hybrid.png"),
            title="fused model vs consensus")
        fig2 = figures.model_comparison(
            comparison, out.with_name(out.stem + "_model_comparison.png"))
        print(f"wrote {fig1} and {fig2}")
    return 0


def _run_training(args) -> tuple[agent.QTable, agent.TrainingLog,
                                 agent.AgentConfig, agent.RewardModel]:
    scored = pipeline.load_and_score(args.input)
    model = _load_or_train_model(args, scored)
    pool = pipeline.build_pool(scored, model)
    config = agent.AgentConfig(
        alpha=args.alpha, gamma=args.gamma,
        epsilon_start=args.epsilon_start, epsilon_end=args.epsilon_end,
        steps=args.steps, seed=args.seed,
        alpha_decay_tau=args.tau if args.tau > 0 else None)
    reward_model = agent.RewardModel(positivity_bonus=args.reward_p,
                                     congruence_bonus=args.reward_c)
    qtable, log = agent.train_agent(pool, config, reward_model)
    return qtable, log, config, reward_model


def _format_qtable(qtable: agent.QTable) -> str:
    header = ["state".ljust(9)] + [a.name.replace("Recommend", "Rec")
                                   for a in agent.ACTION_ORDER]
    lines = ["  ".join(header)]
    for state in SentimentLabel:
        cells = [f"{qtable.q[int(state), j]:12.6f}" for j in range(3)]
        lines.append("  ".join([state.name.ljust(9)] + cells))
    return "\n".join(lines)


def _print_policy(qtable: agent.QTable) -> None:
    policy = agent.greedy_policy(qtable)
    for state in SentimentLabel:
        print(f"  {state.name} -> {policy[state].name}")


def cmd_train_rl(args) -> int:
    qtable, log, config, reward_model = _run_training(args)
    agent.save_qtable(qtable, args.qtable, config, reward_model,
                      steps_trained=log.steps)
    print(f"wrote {args.qtable}: {log.steps} steps, "
          f"mean reward {log.mean_reward:.4f}, "
          f"{log.fallback_deliveries} fallback deliveries")
    _print_policy(qtable)
    if not args.no_figures:
        out = Path(args.qtable)
        fig = figures.qtable_heatmap(qtable, out.with_name(out.stem + "_heatmap.png"))
        print(f"wrote {fig}")
    return 0


def cmd_simulate(args) -> int:
    qtable, log, config, reward_model = _run_training(args)
    print(_format_qtable(qtable))
    print(f"steps={log.steps} mean_reward={log.mean_reward:.4f} "
          f"fallbacks={log.fallback_deliveries}")
    print("greedy policy:")
    _print_policy(qtable)
    if args.qtable:
        agent.save_qtable(qtable, args.qtable, config, reward_model,
                          steps_trained=log.steps)
        print(f"wrote {args.qtable}")
        if not args.no_figures:
            out = Path(args.qtable)
            fig = figures.qtable_heatmap(qtable,
                                         out.with_name(out.stem + "_heatmap.png"))
            print(f"wrote {fig}")
    return 0


def cmd_eda(args) -> int:
    articles, _ = corpus.load_corpus(args.input or pipeline.bundled_corpus_path())
    processed = corpus.preprocess_corpus(articles)
    model = eda.fit_tfidf(processed, args.max_vocab)
    if args.docs:
        wanted = {int(part) for part in args.docs.split(",")}
        docs = [p for p in processed if p.id in wanted]
        missing = wanted - {p.id for p in docs}
        if missing:
            raise ValueError(f"unknown article ids: {sorted(missing)}")
    else:
        docs = processed[:10]

    # Column set: union of each document's strongest terms, capped at --top.
    ranked: list[str] = []
    for doc in docs:
        for term, _ in eda.top_terms(model, doc, max(1, args.top // len(docs) + 1)):
            if term not in ranked:
                ranked.append(term)
    terms = sorted(ranked[:args.top])
    sub_model = eda.TfidfModel(
        vocabulary=tuple(terms),
        document_frequencies={t: model.document_frequencies[t] for t in terms},
        n_documents=model.n_documents)
    matrix = eda.write_matrix_csv(args.out, sub_model, docs)
    print(f"wrote {args.out}: {len(docs)} documents x {len(terms)} terms")
    if not args.no_figures:
        out = Path(args.out)
        fig = figures.tfidf_heatmap(matrix, [d.id for d in docs], terms,
                                    out.with_name(out.stem + "_heatmap.png"))
        print(f"wrote {fig}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import RecommenderService, create_app

    scored = pipeline.load_and_score(args.input)
    model = _load_or_train_model(args, scored)
    if args.qtable:
        qtable, _ = agent.load_qtable(args.qtable)
    else:
        qtable = agent.QTable.zeros()
    _, test_rows = hybrid.stratified_split(scored.non_tie_rows, 0.2, args.seed)
    comparison = evaluation.compare_tools(scored.rows, model, test_rows)
    service = RecommenderService(
        pool=pipeline.build_pool(scored, model),
        articles={a.id: a for a in scored.articles},
        base_qtable=qtable,
        report=evaluation.comparison_to_dict(comparison),
        alpha=args.alpha, gamma=args.gamma, seed=args.seed)
    ui_dir = Path(args.ui) if args.ui else None
    app = create_app(service, ui_dir=ui_dir)
    print(f"serving {len(scored.articles)} articles on "
          f"http://{args.host}:{args.port}")
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


COMMANDS = {
    "ingest": cmd_ingest,
    "score": cmd_score,
    "train-hybrid": cmd_train_hybrid,
    "eval": cmd_eval,
    "train-rl": cmd_train_rl,
    "simulate": cmd_simulate,
    "eda": cmd_eda,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (corpus.CorpusError, DataIntegrityError, ValueError,
            FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

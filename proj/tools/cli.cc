#include "cli.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "xlmatch/errors.h"
#include "xlmatch/file_util.h"
#include "xlmatch/match_io.h"
#include "xlmatch/pipeline.h"
#include "xlmatch/synth.h"
#include "xlmatch/text.h"

namespace xlmatch::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Ends a command with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

struct Options {
  std::string corpus;
  std::string lang_left;
  std::string lang_right;
  double t_sim = 0.6;
  double t_lsi = 0.1;
  double t_group = 0.5;
  std::size_t svd_f = 0;
  std::size_t min_type_support = 3;
  double min_type_fraction = 0.5;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  bool no_revise = false;
  bool no_integrate = false;
  bool no_vsim = false;
  bool no_lsim = false;
  bool no_lsi = false;
  bool random_order = false;
  bool single_step = false;

  std::string report;
  bool dump_signals = false;
  std::string matches;
  std::string truth;

  std::string param = "t_lsi";
  std::string values;
  std::string grid;
  std::string csv;
  bool ablations = false;
  unsigned jobs = 0;

  std::string preset = "clean";
  std::optional<std::size_t> entities;
  std::optional<std::size_t> sets;
  std::optional<std::size_t> types;
  std::optional<double> overlap;
  std::optional<double> presence;
  std::string out_corpus;
  std::string out_truth;
};

RunConfig run_config(const Options& o) {
  RunConfig c;
  c.left_language = o.lang_left;
  c.right_language = o.lang_right;
  c.alignment.t_sim = o.t_sim;
  c.alignment.t_lsi = o.t_lsi;
  c.alignment.t_group = o.t_group;
  if (o.svd_f > 0) c.alignment.svd_f = o.svd_f;
  c.typemap.min_support = o.min_type_support;
  c.typemap.min_fraction = o.min_type_fraction;
  c.ablation.revise = !o.no_revise;
  c.ablation.integrate = !o.no_integrate;
  c.ablation.use_vsim = !o.no_vsim;
  c.ablation.use_lsim = !o.no_lsim;
  c.ablation.use_lsi = !o.no_lsi;
  c.ablation.random_order = o.random_order;
  c.ablation.single_step = o.single_step;
  c.ablation.seed = o.seed;
  c.seed = o.seed;
  return c;
}

fs::path out_path(const Options& o, const std::string& explicit_path,
                  const std::string& default_name) {
  if (!explicit_path.empty()) return explicit_path;
  return fs::path(o.out_dir) / default_name;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string());
}

LoadResult load(const Options& o) {
  if (o.corpus.empty()) throw Exit{kMissingCorpus, "no corpus given (--corpus)"};
  if (!fs::is_regular_file(o.corpus)) {
    throw Exit{kMissingCorpus, "corpus not found: " + o.corpus};
  }
  LoadOptions lo;
  if (!o.lang_left.empty() && !o.lang_right.empty()) lo.languages = {o.lang_left, o.lang_right};
  try {
    return load_corpus(o.corpus, lo);
  } catch (const IoError& e) {
    throw Exit{kMissingCorpus, e.what()};
  }
}

Prepared prepare_or_exit(const Corpus& corpus, const RunConfig& config) {
  auto prepared = prepare(corpus, config);
  if (prepared.types.empty()) {
    throw Exit{kNoMappedTypes, "no mapped entity types with dual infoboxes"};
  }
  return prepared;
}

GroundTruth load_truth(const Options& o) {
  if (o.truth.empty()) throw Exit{kFailure, "no ground truth given (--truth)"};
  std::ifstream in(o.truth);
  if (!in) throw IoError("cannot read " + o.truth);
  return GroundTruth::read_tsv(in);
}

std::string format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int cmd_ingest(const Options& o, std::ostream& out) {
  const auto loaded = load(o);
  const auto& r = loaded.report;
  json doc;
  doc["corpus"] = o.corpus;
  doc["articles"] = loaded.corpus.size();
  doc["languages"] = loaded.corpus.languages();
  doc["lines_read"] = r.lines_read;
  doc["malformed"] = r.malformed;
  doc["duplicate_ids"] = r.duplicate_ids;
  doc["foreign_language"] = r.foreign_language;
  doc["skipped"] = r.skipped();
  doc["skipped_lines"] = r.skipped_lines;
  doc["reciprocal_links_added"] = r.reciprocal_links_added;
  doc["dangling_links"] = r.dangling_links;
  const auto text = doc.dump(2) + "\n";
  if (!o.report.empty()) write_file_atomic(o.report, text);
  out << text;
  return kOk;
}

int cmd_typemap(const Options& o, std::ostream& out) {
  const auto loaded = load(o);
  auto config = run_config(o);
  const auto prepared = prepare(loaded.corpus, config);
  ensure_dir(o.out_dir);
  const auto path = fs::path(o.out_dir) / "typemap.json";
  write_file_atomic(path, typemap_to_json(prepared.mapping));
  for (const auto& m : prepared.mapping.matches) {
    out << m.types.label() << "\tsupport=" << m.support
        << "\tfraction=" << format(m.fraction) << "\n";
  }
  if (prepared.mapping.empty()) throw Exit{kNoMappedTypes, "no entity types could be mapped"};
  return kOk;
}

int cmd_dict(const Options& o, std::ostream& out) {
  const auto loaded = load(o);
  auto langs = loaded.corpus.languages();
  std::string from = o.lang_left, to = o.lang_right;
  if (from.empty() || to.empty()) {
    if (langs.size() != 2) throw Exit{kFailure, "corpus needs exactly two languages"};
    from = langs[0];
    to = langs[1];
  }
  const auto dict = build_dictionary(loaded.corpus, from, to);
  ensure_dir(o.out_dir);
  std::ostringstream text;
  dict.write_tsv(text);
  write_file_atomic(fs::path(o.out_dir) / "dictionary.tsv", text.str());
  out << from << "->" << to << " entries=" << dict.size() << "\n";
  return kOk;
}

int cmd_match(const Options& o, std::ostream& out) {
  const auto loaded = load(o);
  const auto config = run_config(o);
  const auto prepared = prepare_or_exit(loaded.corpus, config);
  ensure_dir(o.out_dir);

  Manifest manifest;
  manifest.left_language = prepared.left_language;
  manifest.right_language = prepared.right_language;
  std::ostringstream log;
  log << "corpus=" << o.corpus << " articles=" << loaded.corpus.size()
      << " skipped_lines=" << loaded.report.skipped() << " duals=" << prepared.dual_count
      << " mapped_types=" << prepared.mapping.matches.size()
      << " config=" << config.ablation.label() << "\n";
  for (const auto& t : prepared.skipped) log << t.label() << " skipped: fewer than two attributes\n";

  for (const auto& ctx : prepared.types) {
    const auto result = align(ctx, config);
    const auto name = match_file_name(ctx.types);
    write_file_atomic(fs::path(o.out_dir) / name,
                      matches_to_json(result.matches, ctx.signals,
                                      prepared.left_language, prepared.right_language));
    manifest.entries.push_back({ctx.types, name, result.matches.size()});
    const auto& s = result.stats;
    log << ctx.types.label() << " duals=" << ctx.duals.size()
        << " attributes=" << ctx.groups.size() << " svd_f=" << ctx.model.rank()
        << " pairs=" << s.pairs_scored << " queue=" << s.queue_size
        << " certain=" << s.certain << " uncertain=" << s.uncertain
        << " revised=" << s.revised << " integrated_certain=" << s.integrated_certain
        << " integrated_revised=" << s.integrated_revised << " rejected=" << s.rejected
        << " matches=" << result.matches.size() << "\n";
    if (o.dump_signals) {
      std::ostringstream occ, tuples;
      write_occurrence_tsv(occ, ctx.matrix, ctx.groups);
      write_tuples_tsv(tuples, ctx.signals, score_all_pairs(ctx.signals));
      const auto stem = name.substr(0, name.size() - 5);
      write_file_atomic(fs::path(o.out_dir) / (stem + ".occurrence.tsv"), occ.str());
      write_file_atomic(fs::path(o.out_dir) / (stem + ".tuples.tsv"), tuples.str());
    }
  }
  write_file_atomic(fs::path(o.out_dir) / "manifest.json", manifest_to_json(manifest));
  write_file_atomic(fs::path(o.out_dir) / "match.log", log.str());
  out << log.str();
  return kOk;
}

const TypeContext* find_context(const Prepared& p, const TypePair& types) {
  for (const auto& c : p.types) {
    if (c.types == types) return &c;
  }
  return nullptr;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto truth = load_truth(o);
  const auto loaded = load(o);
  const auto config = run_config(o);
  const auto prepared = prepare_or_exit(loaded.corpus, config);
  const fs::path dir = o.matches.empty() ? fs::path(o.out_dir) : fs::path(o.matches);

  std::ifstream manifest_in(dir / "manifest.json");
  if (!manifest_in) throw IoError("cannot read " + (dir / "manifest.json").string());
  const auto manifest = read_manifest(manifest_in);
  if (manifest.left_language != prepared.left_language ||
      manifest.right_language != prepared.right_language) {
    throw Exit{kSchemaMismatch, "matches are for " + manifest.left_language + "/" +
                                    manifest.right_language + ", corpus is " +
                                    prepared.left_language + "/" + prepared.right_language};
  }
  if (truth.size() == 0) throw Exit{kSchemaMismatch, "ground truth is empty"};

  std::map<TypePair, PairSet> extracted;
  for (const auto& entry : manifest.entries) {
    const auto* ctx = find_context(prepared, entry.types);
    if (ctx == nullptr) {
      throw Exit{kSchemaMismatch, "match file type pair " + entry.types.label() +
                                      " is not a mapped type pair of the corpus"};
    }
    std::ifstream in(dir / entry.file);
    if (!in) throw IoError("cannot read " + (dir / entry.file).string());
    const auto members = read_matches_json(in, manifest.left_language, manifest.right_language);
    for (const auto& match : members) {
      for (const auto& key : match) {
        const auto& side = key.side == Side::kLeft ? ctx->frequencies.left : ctx->frequencies.right;
        if (!side.contains(key.name)) {
          throw Exit{kSchemaMismatch, "attribute '" + key.name + "' of " + entry.types.label() +
                                          " does not occur in the corpus"};
        }
      }
    }
    extracted[entry.types] = flatten_members(members);
  }

  EvalReport report;
  try {
    report = evaluate(prepared, extracted, truth, config.seed);
  } catch (const EvaluationError& e) {
    throw Exit{kSchemaMismatch, e.what()};
  }
  ensure_dir(o.out_dir);
  write_file_atomic(fs::path(o.out_dir) / "eval.json", report.to_json());
  const auto table = report.to_table();
  write_file_atomic(fs::path(o.out_dir) / "eval.txt", table);
  out << table;
  return kOk;
}

std::vector<double> parse_values(const Options& o) {
  std::vector<double> values;
  if (!o.values.empty()) {
    for (const auto& item : split_any(o.values, {","})) {
      try {
        values.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw Exit{kFailure, "bad value in --values: " + item};
      }
    }
  } else if (!o.grid.empty()) {
    const auto parts = split_any(o.grid, {":"});
    double start = 0, stop = 0, step = 0;
    try {
      if (parts.size() != 3) throw std::invalid_argument("grid");
      start = std::stod(parts[0]);
      stop = std::stod(parts[1]);
      step = std::stod(parts[2]);
    } catch (const std::exception&) {
      throw Exit{kFailure, "--grid expects start:stop:step"};
    }
    if (!(step > 0) || stop < start) throw Exit{kFailure, "--grid needs step > 0 and stop >= start"};
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < n; ++i) {
      values.push_back(std::round((start + static_cast<double>(i) * step) * 1e9) / 1e9);
    }
  }
  return values;
}

double& sweep_target(RunConfig& c, const std::string& param) {
  if (param == "t_sim") return c.alignment.t_sim;
  if (param == "t_lsi") return c.alignment.t_lsi;
  if (param == "t_group") return c.alignment.t_group;
  throw Exit{kFailure, "--param must be t_sim, t_lsi or t_group"};
}

struct SweepRow {
  std::string label;
  double threshold = 0.0;
  RunConfig config;
  Metrics metrics;
};

std::vector<AblationOptions> table_configurations(const AblationOptions& base) {
  std::vector<AblationOptions> out;
  auto variant = [&](auto&& change) {
    auto a = base;
    change(a);
    out.push_back(a);
  };
  variant([](AblationOptions&) {});
  variant([](AblationOptions& a) { a.revise = false; });
  variant([](AblationOptions& a) { a.integrate = false; });
  variant([](AblationOptions& a) { a.random_order = true; });
  variant([](AblationOptions& a) { a.single_step = true; });
  variant([](AblationOptions& a) { a.use_vsim = false; });
  variant([](AblationOptions& a) { a.use_lsim = false; });
  variant([](AblationOptions& a) { a.use_lsi = false; });
  return out;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto truth = load_truth(o);
  const auto loaded = load(o);
  const auto base = run_config(o);
  auto values = parse_values(o);
  RunConfig probe = base;
  const double base_value = sweep_target(probe, o.param);
  if (values.empty() && !o.ablations) throw Exit{kFailure, "give --values, --grid or --ablations"};
  for (const auto v : values) {
    if (!(v >= 0.0 && v <= 1.0)) throw Exit{kFailure, "sweep values must be in [0, 1]"};
  }
  const auto prepared = prepare_or_exit(loaded.corpus, base);

  std::vector<SweepRow> rows;
  for (const auto v : values) {
    SweepRow row{base.ablation.label(), v, base, {}};
    sweep_target(row.config, o.param) = v;
    rows.push_back(std::move(row));
  }
  if (o.ablations) {
    for (const auto& a : table_configurations(base.ablation)) {
      SweepRow row{a.label(), base_value, base, {}};
      row.config.ablation = a;
      rows.push_back(std::move(row));
    }
  }

  auto evaluate_row = [&](SweepRow& row) {
    std::map<TypePair, PairSet> extracted;
    for (const auto& ctx : prepared.types) {
      extracted[ctx.types] = flatten_matches(align(ctx, row.config).matches, ctx.signals);
    }
    std::map<TypePair, PairSet> scored;
    EvalReport report;
    for (const auto& [types, pairs] : truth.by_type()) {
      const auto* ctx = find_context(prepared, types);
      if (ctx == nullptr) {
        throw EvaluationError("ground truth type pair " + types.label() + " is not mapped");
      }
      TypeEvaluation ev;
      ev.types = types;
      const auto present = present_truth(*ctx, pairs);
      ev.weighted = weighted_metrics(extracted[types], present, ctx->frequencies);
      report.types.push_back(ev);
    }
    report.aggregate();
    row.metrics = report.weighted;
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned jobs = std::min<std::size_t>(o.jobs == 0 ? hw : o.jobs, std::max<std::size_t>(1, rows.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (auto i = next++; i < rows.size(); i = next++) evaluate_row(rows[i]);
      } catch (const std::exception& e) {
        errors[w] = e.what();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors) {
    if (!e.empty()) throw Exit{kSchemaMismatch, e};
  }

  std::ostringstream csv;
  csv << "label,param,threshold,P,R,F\n";
  for (const auto& r : rows) {
    char threshold[32];
    std::snprintf(threshold, sizeof threshold, "%g", r.threshold);
    csv << r.label << ',' << o.param << ',' << threshold << ',' << format(r.metrics.precision)
        << ',' << format(r.metrics.recall) << ',' << format(r.metrics.f) << '\n';
  }
  const auto path = out_path(o, o.csv, "sweep.csv");
  if (path.has_parent_path()) ensure_dir(path.parent_path());
  write_file_atomic(path, csv.str());
  out << csv.str();
  return kOk;
}

int cmd_synth(const Options& o, std::ostream& out) {
  SynthSpec spec;
  if (o.preset == "clean") {
    spec = SynthSpec::clean(o.seed);
  } else if (o.preset == "noisy") {
    spec = SynthSpec::noisy(o.seed);
  } else {
    throw Exit{kFailure, "--preset must be clean or noisy"};
  }
  if (o.entities) spec.n_entities = *o.entities;
  if (o.sets) spec.synonym_sets = *o.sets;
  if (o.types) spec.n_types = *o.types;
  if (o.overlap) spec.schema_overlap = *o.overlap;
  if (o.presence) spec.presence = *o.presence;
  const auto synth = generate(spec);

  const auto corpus_path = out_path(o, o.out_corpus, "corpus.jsonl");
  const auto truth_path = out_path(o, o.out_truth, "truth.tsv");
  for (const auto& p : {corpus_path, truth_path}) {
    if (p.has_parent_path()) ensure_dir(p.parent_path());
  }
  write_file_atomic(corpus_path, synth.corpus_jsonl);
  std::ostringstream truth;
  synth.truth.write_tsv(truth);
  write_file_atomic(truth_path, truth.str());
  out << "corpus=" << corpus_path.string() << " truth=" << truth_path.string()
      << " pairs=" << synth.truth.size() << "\n";
  return kOk;
}

void add_shared_options(CLI::App& app, Options& o) {
  app.add_option("--corpus", o.corpus, "Line-delimited JSON corpus");
  app.add_option("--lang-left", o.lang_left, "Left language code");
  app.add_option("--lang-right", o.lang_right, "Right language code");
  app.add_option("--t-sim", o.t_sim, "Certain-candidate threshold on max(vsim, lsim)")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--t-lsi", o.t_lsi, "LSI correlation threshold")->check(CLI::Range(0.0, 1.0));
  app.add_option("--t-group", o.t_group, "Inductive grouping threshold")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--svd-f", o.svd_f, "LSI rank (0: automatic)");
  app.add_option("--min-type-support", o.min_type_support, "Minimum cross-links for a type pair")
      ->check(CLI::PositiveNumber);
  app.add_option("--min-type-fraction", o.min_type_fraction,
                 "Minimum share of a type's cross-links")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--seed", o.seed, "Seed for random orderings and synthetic corpora");
  app.add_option("--out-dir", o.out_dir, "Output directory");
  app.add_flag("--no-revise", o.no_revise, "Skip the uncertain-revision phase");
  app.add_flag("--no-integrate", o.no_integrate, "Join matches without the LSI check");
  app.add_flag("--no-vsim", o.no_vsim, "Ignore value similarity");
  app.add_flag("--no-lsim", o.no_lsim, "Ignore link similarity");
  app.add_flag("--no-lsi", o.no_lsi, "Ignore LSI; order by max(vsim, lsim)");
  app.add_flag("--random-order", o.random_order, "Shuffle the candidate queue (seeded)");
  app.add_flag("--single-step", o.single_step, "Accept every positive candidate in one pass");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cross-language infobox attribute matcher", "xlmatch"};
  app.set_config("--config", "", "key=value config file; command-line flags win");
  app.require_subcommand(1);
  add_shared_options(app, o);

  auto* ingest = app.add_subcommand("ingest", "Load a corpus and print the load report");
  ingest->add_option("--report", o.report, "Also write the report to this file");
  app.add_subcommand("typemap", "Match entity types and write typemap.json");
  app.add_subcommand("dict", "Build the title dictionary and write dictionary.tsv");
  auto* match = app.add_subcommand("match", "Align attributes and write match files");
  match->add_flag("--dump-signals", o.dump_signals, "Also write occurrence and tuple TSVs");
  auto* eval = app.add_subcommand("eval", "Score match files against a ground truth");
  eval->add_option("--matches", o.matches, "Directory with manifest.json (default: --out-dir)");
  eval->add_option("--truth", o.truth, "Ground truth TSV")->required();
  auto* sweep = app.add_subcommand("sweep", "Weighted P/R/F over a threshold grid");
  sweep->add_option("--truth", o.truth, "Ground truth TSV")->required();
  sweep->add_option("--param", o.param, "t_sim, t_lsi or t_group");
  sweep->add_option("--values", o.values, "Comma-separated thresholds");
  sweep->add_option("--grid", o.grid, "start:stop:step");
  sweep->add_flag("--ablations", o.ablations, "Add one row per ablation configuration");
  sweep->add_option("--csv", o.csv, "Output CSV (default: <out-dir>/sweep.csv)");
  sweep->add_option("--jobs", o.jobs, "Worker threads (0: all cores)");
  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus and ground truth");
  synth->add_option("--preset", o.preset, "clean or noisy");
  synth->add_option("--entities", o.entities, "Entities per type");
  synth->add_option("--sets", o.sets, "Synonym sets per type");
  synth->add_option("--types", o.types, "Entity types");
  synth->add_option("--overlap", o.overlap, "Schema overlap knob")->check(CLI::Range(0.0, 1.0));
  synth->add_option("--presence", o.presence, "Attribute presence")->check(CLI::Range(0.0, 1.0));
  synth->add_option("--out-corpus", o.out_corpus, "Corpus path (default: <out-dir>/corpus.jsonl)");
  synth->add_option("--out-truth", o.out_truth, "Truth path (default: <out-dir>/truth.tsv)");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kFailure;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(o, out);
    if (app.got_subcommand("typemap")) return cmd_typemap(o, out);
    if (app.got_subcommand("dict")) return cmd_dict(o, out);
    if (match->parsed()) return cmd_match(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (synth->parsed()) return cmd_synth(o, out);
  } catch (const Exit& e) {
    err << "xlmatch: " << e.message << "\n";
    return e.code;
  } catch (const EvaluationError& e) {
    err << "xlmatch: " << e.what() << "\n";
    return kSchemaMismatch;
  } catch (const Error& e) {
    err << "xlmatch: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace xlmatch::cli

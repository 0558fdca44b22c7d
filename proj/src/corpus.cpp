#include "lstar/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "lstar/internal_universe.hpp"
#include "lstar/print.hpp"
#include "lstar/universe.hpp"

namespace lstar {

namespace {

WitnessReport check_goal(Mode mode, const Context& ctx, const TermPtr& term,
                         const TermPtr& type, long long budget) {
  const Signature& sig = declare_signature(mode);
  WitnessReport rep;
  rep.mode = mode;
  rep.source_ctx = ctx;
  rep.source_term = term;
  rep.source_type = type;
  rep.translated_ctx = ctx;
  rep.witness = term;
  rep.goal = type;
  rep.goal_display = type;
  Fuel fuel(budget);
  try {
    check_context(sig, ctx, fuel);
    check(sig, ctx, term, type, fuel);
    rep.status = Status::Proved;
  } catch (const TypeError& e) {
    rep.status = e.kind == ErrorKind::FuelExhausted ? Status::FuelExhausted
                                                    : Status::Failed;
    rep.diagnostics.push_back(describe(e, context_scope(ctx)));
  }
  rep.steps = fuel.used();
  return rep;
}

// Extracts a from a goal type of the form T a (directly or after whnf).
TermPtr decode_T(const Signature& sig, const TermPtr& type, long long budget) {
  if (type->tag == Tag::App && is_const(type->a, "T")) return type->b;
  try {
    Fuel fuel(budget);
    TermPtr w = whnf(sig, type, fuel);
    if (w->tag == Tag::App && is_const(w->a, "T")) return w->b;
  } catch (const TypeError&) {
  }
  return nullptr;
}

}  // namespace

FileResult run_file(Pipeline pipeline, const std::string& path, const RunOptions& opts) {
  SourceFile src = parse_file(path);
  FileResult out;
  out.path = path;
  out.mode = src.effective_mode(opts.mode);

  switch (pipeline) {
    case Pipeline::Check: {
      for (const Goal& g : src.goals)
        out.reports.push_back(check_goal(out.mode, src.assumes, g.term, g.type, opts.fuel));
      break;
    }

    case Pipeline::Reflect: {
      if (out.mode != Mode::LStar) {
        out.file_errors.push_back(
            "reflect expects a plain lambda-star file, but this one is in mode `" +
            std::string(to_string(out.mode)) + "`");
        out.exit_class = 1;
        return out;
      }
      std::vector<std::pair<TermPtr, TermPtr>> translated;
      for (const Goal& g : src.goals) {
        WitnessReport rep = check_reflection(src.assumes, g.term, g.type, opts.fuel);
        if (rep.status == Status::Proved) translated.emplace_back(rep.witness, rep.goal);
        out.reports.push_back(std::move(rep));
      }
      out.emitted = emit_source(Mode::LStarU, reflect_context(src.assumes), translated);
      break;
    }

    case Pipeline::Star: {
      const Signature& sig = declare_signature(out.mode);
      for (const Goal& g : src.goals) {
        TermPtr code = decode_T(sig, g.type, opts.fuel);
        if (!code) {
          WitnessReport rep;
          rep.mode = out.mode;
          rep.source_ctx = src.assumes;
          rep.source_term = g.term;
          rep.source_type = g.type;
          rep.status = Status::Failed;
          rep.diagnostics.push_back("MalformedInput: goal type `" +
                                    print(g.type, context_scope(src.assumes)) +
                                    "` is not of the form `T a`");
          out.reports.push_back(std::move(rep));
          continue;
        }
        out.reports.push_back(
            out.mode == Mode::Internal
                ? check_extensionality_internal(src.assumes, g.term, code, opts.fuel)
                : check_extensionality(src.assumes, g.term, code, opts.fuel));
      }
      break;
    }

    case Pipeline::Witness: {
      for (const Goal& g : src.goals) {
        WitnessReport refl = check_reflection(src.assumes, g.term, g.type, opts.fuel);
        if (refl.status != Status::Proved) {
          out.reports.push_back(std::move(refl));
          continue;
        }
        // Reflection lands every assumption in a U-context entry x : T <code>,
        // so the extensionality pass can run over the translated assumptions.
        Context uctx = reflect_context(src.assumes);
        TermPtr code = reflect(g.type);
        out.reports.push_back(
            out.mode == Mode::Internal
                ? check_extensionality_internal(uctx, refl.witness, code, opts.fuel)
                : check_extensionality(uctx, refl.witness, code, opts.fuel));
      }
      break;
    }
  }

  out.exit_class = exit_class(out.reports);
  return out;
}

std::vector<FileResult> run_corpus(const std::string& directory, const RunOptions& opts) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory))
    throw std::runtime_error("corpus directory not found: " + directory);
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".lst")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<FileResult> out;
  out.reserve(paths.size());
  for (const std::string& p : paths) {
    try {
      out.push_back(run_file(Pipeline::Check, p, opts));
    } catch (const ParseError& e) {
      FileResult r;
      r.path = p;
      r.file_errors.push_back(e.rendered);
      r.exit_class = 3;
      out.push_back(std::move(r));
    }
  }
  return out;
}

int exit_class(const std::vector<WitnessReport>& reports) {
  int worst = 0;
  for (const WitnessReport& r : reports) {
    if (r.status == Status::FuelExhausted) return 2;
    if (r.status == Status::Failed) worst = 1;
  }
  return worst;
}

nlohmann::json report_json(const WitnessReport& r) {
  std::vector<Name> src_scope = context_scope(r.source_ctx);
  std::vector<Name> tr_scope = context_scope(r.translated_ctx);
  nlohmann::json j;
  j["mode"] = to_string(r.mode);
  j["status"] = to_string(r.status);
  std::string goal_text;
  if (r.source_term) {
    goal_text = print(r.source_term, src_scope);
    if (r.source_type) goal_text += " : " + print(r.source_type, src_scope);
  }
  j["goal"] = goal_text;
  j["witness"] = r.witness ? print(r.witness, tr_scope) : "";
  TermPtr g = r.goal_display ? r.goal_display : r.goal;
  j["goal_type"] = g ? print(g, tr_scope) : "";
  j["errors"] = r.diagnostics;
  j["steps"] = r.steps;
  return j;
}

nlohmann::json file_json(const FileResult& result) {
  nlohmann::json j;
  j["file"] = result.path;
  j["mode"] = to_string(result.mode);
  switch (result.exit_class) {
    case 0: j["status"] = "ok"; break;
    case 1: j["status"] = "failed"; break;
    case 2: j["status"] = "fuel-exhausted"; break;
    default: j["status"] = "parse-error"; break;
  }
  j["exit"] = result.exit_class;
  j["reports"] = nlohmann::json::array();
  for (const WitnessReport& r : result.reports) j["reports"].push_back(report_json(r));
  j["errors"] = result.file_errors;
  j["emitted"] = result.emitted;
  return j;
}

std::string render_report(const WitnessReport& r) {
  std::ostringstream os;
  std::vector<Name> src_scope = context_scope(r.source_ctx);
  std::vector<Name> tr_scope = context_scope(r.translated_ctx);
  os << "[" << to_string(r.status) << "]";
  if (r.source_term) {
    os << " " << print(r.source_term, src_scope);
    if (r.source_type) os << " : " << print(r.source_type, src_scope);
  }
  os << "\n";
  if (!r.source_ctx.empty())
    os << "  context: " << print_context(r.source_ctx) << "\n";
  if (r.witness && r.witness != r.source_term)
    os << "  witness: " << print(r.witness, tr_scope) << "\n";
  TermPtr g = r.goal_display ? r.goal_display : r.goal;
  if (g && g != r.source_type) os << "  goal: " << print(g, tr_scope) << "\n";
  for (const std::string& d : r.diagnostics) os << "  error: " << d << "\n";
  os << "  steps: " << r.steps << "\n";
  return os.str();
}

}  // namespace lstar

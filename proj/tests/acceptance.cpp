// Acceptance gate: one line per criterion, exit code = number of failures.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lstar/corpus.hpp"
#include "lstar/extensionality.hpp"
#include "lstar/generate.hpp"
#include "lstar/internal_universe.hpp"
#include "lstar/parse.hpp"
#include "lstar/print.hpp"
#include "lstar/reduce.hpp"
#include "lstar/universe.hpp"

using namespace lstar;
namespace fs = std::filesystem;

namespace {

// Pinned budgets, in seconds of wall time.
constexpr double kReflectionBudget = 10.0;
constexpr double kExtensionalityBudget = 30.0;
constexpr double kSubstitutionBudget = 60.0;
constexpr double kLoopBudget = 1.0;

// Pinned property-test drivers.
constexpr std::uint64_t kSubstSeed = 11;
constexpr std::uint64_t kConvSeed = 23;
constexpr int kGenSize = 4;
constexpr int kGenCount = 500;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct GoalCase {
  std::string file;  // basename
  Context ctx;
  TermPtr term;
  TermPtr type;
  WitnessReport reflection;
};

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(LSTAR_CORPUS_DIR))
    if (e.path().extension() == ".lst") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Name> names_of(const Context& ctx) {
  std::vector<Name> out;
  for (const auto& e : ctx.entries) out.push_back(e.name);
  return out;
}

// ---------------------------------------------------------------- criterion 1

bool reflection_suite(std::vector<GoalCase>& cases, std::string& detail) {
  Clock::time_point start = Clock::now();
  std::set<RuleCase> covered;
  int proved = 0;
  int total = 0;
  std::string first_failure;
  for (const std::string& path : corpus_files()) {
    SourceFile f = parse_file(path);
    for (const Goal& g : f.goals) {
      ++total;
      GoalCase c;
      c.file = fs::path(path).filename().string();
      c.ctx = f.assumes;
      c.term = g.term;
      c.type = g.type;
      c.reflection = check_reflection(f.assumes, g.term, g.type);
      std::set<RuleCase> used = judgment_cases(f.assumes, g.term, g.type);
      covered.insert(used.begin(), used.end());
      if (c.reflection.status == Status::Proved) {
        ++proved;
      } else if (first_failure.empty()) {
        first_failure = c.file + (c.reflection.diagnostics.empty()
                                      ? ""
                                      : ": " + c.reflection.diagnostics.front());
      }
      cases.push_back(std::move(c));
    }
  }
  double took = seconds_since(start);
  std::ostringstream os;
  os << proved << "/" << total << " proved, " << covered.size() << "/10 cases, " << std::fixed
     << took << "s";
  if (!first_failure.empty()) os << "; first failure " << first_failure;
  detail = os.str();
  return total >= 30 && proved == total && covered.size() == 10 && took < kReflectionBudget;
}

// ---------------------------------------------------------------- criterion 2

TermPtr expected_identity_goal() {
  TermPtr T_U = cnst("U");
  return pi("A", T_U,
            pi("A'", T_U,
               pi("A*", apps(cnst("Eq"), {var(1), var(0)}),
                  pi("x", app(cnst("T"), var(2)),
                     pi("x'", app(cnst("T"), var(2)),
                        pi("x*", apps(cnst("Rel"), {var(4), var(3), var(2), var(1), var(0)}),
                           apps(cnst("Rel"),
                                {var(5), var(4), var(3), var(2), var(1)})))))));
}

bool extensionality_suite(const std::vector<GoalCase>& cases, std::string& detail) {
  Clock::time_point start = Clock::now();
  const Signature& esig = declare_signature(Mode::LStarUEq);
  int proved = 0;
  bool identity_seen = false;
  bool identity_goal_ok = false;
  std::string first_failure;
  for (const GoalCase& c : cases) {
    if (c.reflection.status != Status::Proved) continue;
    WitnessReport rep = check_extensionality(reflect_context(c.ctx), c.reflection.witness,
                                             reflect(c.type));
    if (rep.status == Status::Proved) {
      ++proved;
    } else if (first_failure.empty()) {
      first_failure =
          c.file + (rep.diagnostics.empty() ? "" : ": " + rep.diagnostics.front());
    }
    if (c.file == "poly_id.lst" && rep.status == Status::Proved && rep.goal) {
      identity_seen = true;
      Fuel fuel;
      identity_goal_ok = alpha_equal(normalize(esig, rep.goal, fuel), expected_identity_goal());
    }
  }
  double took = seconds_since(start);
  std::ostringstream os;
  os << proved << "/" << cases.size() << " proved, identity goal "
     << (identity_goal_ok ? "matches" : "MISSING") << ", " << std::fixed << took << "s";
  if (!first_failure.empty()) os << "; first failure " << first_failure;
  detail = os.str();
  return cases.size() >= 30 && proved == static_cast<int>(cases.size()) && identity_seen &&
         identity_goal_ok && took < kExtensionalityBudget;
}

// ---------------------------------------------------------------- criterion 3

bool substitution_suite(std::string& detail) {
  Clock::time_point start = Clock::now();
  int reflect_bad = 0;
  int prime_bad = 0;
  int star_bad = 0;
  std::vector<SubstInstance> plain = generate_subst(kSubstSeed, kGenSize, kGenCount);
  for (const SubstInstance& inst : plain) {
    if (!alpha_equal(reflect(subst(inst.m, 0, inst.n)),
                     subst(reflect(inst.m), 0, reflect(inst.n))))
      ++reflect_bad;
    if (!alpha_equal(prime(subst(inst.m, 0, inst.n)),
                     subst(prime(inst.m), 0, prime(inst.n))))
      ++prime_bad;
  }
  std::vector<SubstInstance> coded = generate_u_subst(kSubstSeed, kGenSize, kGenCount);
  for (const SubstInstance& inst : coded) {
    TermPtr s1 = subst(star(inst.m), 0, shift(star(inst.n), 2, 0));
    TermPtr s2 = subst(s1, 0, shift(embed_prime(inst.n), 1, 0));
    TermPtr s3 = subst(s2, 0, embed_plain(inst.n));
    if (!alpha_equal(star(subst(inst.m, 0, inst.n)), s3)) ++star_bad;
  }
  double took = seconds_since(start);
  std::ostringstream os;
  os << plain.size() << "+" << plain.size() << "+" << coded.size() << " instances, failures "
     << reflect_bad << "/" << prime_bad << "/" << star_bad << ", " << std::fixed << took << "s";
  detail = os.str();
  return plain.size() == kGenCount && coded.size() == kGenCount && reflect_bad == 0 &&
         prime_bad == 0 && star_bad == 0 && took < kSubstitutionBudget;
}

// ---------------------------------------------------------------- criterion 4

bool conversion_suite(std::string& detail) {
  const Signature& usig = declare_signature(Mode::LStarU);
  const Signature& esig = declare_signature(Mode::LStarUEq);
  int reflect_bad = 0;
  int star_bad = 0;
  std::vector<RedexPair> plain = generate_redexes(kConvSeed, kGenSize, kGenCount);
  for (const RedexPair& p : plain) {
    Fuel fuel(kDefaultFuel);
    if (!conv(usig, reflect(p.redex), reflect(p.reduct), fuel)) ++reflect_bad;
  }
  std::vector<RedexPair> coded = generate_u_redexes(kConvSeed, kGenSize, kGenCount);
  for (const RedexPair& p : coded) {
    Fuel fuel(kDefaultFuel);
    if (!conv(esig, star(p.redex), star(p.reduct), fuel)) ++star_bad;
  }
  std::ostringstream os;
  os << plain.size() << "+" << coded.size() << " pairs, failures " << reflect_bad << "/"
     << star_bad;
  detail = os.str();
  return plain.size() == kGenCount && coded.size() == kGenCount && reflect_bad == 0 &&
         star_bad == 0;
}

// ---------------------------------------------------------------- criterion 5

bool golden_suite(std::string& detail) {
  std::vector<std::pair<std::string, std::string>> produced;

  const char* ueq_src =
      "mode lstarUeq\n"
      "assume a : U\n"
      "assume a' : U\n"
      "assume e : Eq a a'\n"
      "assume f : (x : T a) -> U\n"
      "assume f' : (x' : T a') -> U\n"
      "assume e' : (x : T a) -> (x' : T a') -> (x* : Rel a a' e x x') -> Eq (f x) (f' x')\n"
      "assume g : T (qFun a f)\n"
      "assume g' : T (qFun a' f')\n"
      "assume p : T (qSum a f)\n"
      "assume p' : T (qSum a' f')\n"
      "check * : *\n";
  SourceFile ueq = parse_source(ueq_src, "<golden>");
  const Signature& esig = declare_signature(Mode::LStarUEq);
  std::vector<Name> scope = names_of(ueq.assumes);
  TermPtr fun_spine =
      parse_term("Rel (qFun a f) (qFun a' f') (qFunE a a' f f' e e') g g'", scope);
  TermPtr sum_spine =
      parse_term("Rel (qSum a f) (qSum a' f') (qSumE a a' f f' e e') p p'", scope);
  Fuel f1;
  produced.emplace_back("rel_qfun", print(normalize(esig, fun_spine, f1), scope) + "\n");
  Fuel f2;
  produced.emplace_back("rel_qsum", print(normalize(esig, sum_spine, f2), scope) + "\n");

  TermPtr id_term = lam("A", app(cnst("T"), cnst("qstar")),
                        lam("x", app(cnst("T"), var(0, "A")), var(0, "x")));
  TermPtr id_code = reflect(pi("A", sort(), pi("x", var(0, "A"), var(1, "A"))));
  WitnessReport rep = check_extensionality(Context{}, id_term, id_code);
  if (rep.status != Status::Proved || !rep.goal || !rep.witness) {
    detail = "identity pipeline did not prove";
    return false;
  }
  Fuel f3;
  produced.emplace_back("identity_goal", print(normalize(esig, rep.goal, f3)) + "\n");
  produced.emplace_back("star_witness_id", print(rep.witness) + "\n");

  FileResult fr =
      run_file(Pipeline::Reflect, std::string(LSTAR_CORPUS_DIR) + "/poly_id.lst", RunOptions{});
  produced.emplace_back("reflect_id", fr.emitted);

  const char* int_src =
      "mode internal\n"
      "assume a : U\n"
      "assume a' : U\n"
      "assume a* : T (qEq a a')\n"
      "assume b : U\n"
      "assume b' : U\n"
      "assume b* : T (qEq b b')\n"
      "assume e : T (qEq a b)\n"
      "assume e' : T (qEq a' b')\n"
      "check * : *\n";
  SourceFile isf = parse_source(int_src, "<golden>");
  const Signature& isig = declare_signature(Mode::Internal);
  std::vector<Name> iscope = names_of(isf.assumes);
  TermPtr eq_spine =
      parse_term("T (rel (qEq a b) (qEq a' b') (qEqE a a' a* b b' b*) e e')", iscope);
  Fuel f4;
  produced.emplace_back("internal_qeq_tower", print(normalize(isig, eq_spine, f4), iscope) + "\n");

  int matched = 0;
  std::string mismatched;
  for (const auto& [name, body] : produced) {
    std::string stored = read_file(std::string(LSTAR_GOLDEN_DIR) + "/" + name + ".golden");
    if (stored == body && !stored.empty()) {
      ++matched;
    } else if (mismatched.empty()) {
      mismatched = name;
    }
  }
  std::ostringstream os;
  os << matched << "/" << produced.size() << " files byte-identical";
  if (!mismatched.empty()) os << "; first mismatch " << mismatched;
  detail = os.str();
  return matched == 6;
}

// ---------------------------------------------------------------- criterion 6

bool robustness_suite(std::string& detail) {
  std::string loop_out = (fs::temp_directory_path() / "lstar_acc_loop.txt").string();
  std::string star_out = (fs::temp_directory_path() / "lstar_acc_star.txt").string();
  std::string bad = LSTAR_BAD_CORPUS_DIR;

  std::string loop_cmd = std::string(LSTAR_CLI) + " check " + bad + "/loop.lst --fuel 1000 > " +
                         loop_out + " 2>&1";
  Clock::time_point start = Clock::now();
  int rc = std::system(loop_cmd.c_str());
  double took = seconds_since(start);
  int loop_exit = rc == -1 ? -1 : WEXITSTATUS(rc);

  std::string star_cmd =
      std::string(LSTAR_CLI) + " star " + bad + "/bad_star.lst > " + star_out + " 2>&1";
  int rc2 = std::system(star_cmd.c_str());
  int star_exit = rc2 == -1 ? -1 : WEXITSTATUS(rc2);
  std::string star_text = read_file(star_out);
  bool names_subterm = star_text.find("Mismatch") != std::string::npos &&
                       star_text.find("`x`") != std::string::npos;

  std::ostringstream os;
  os << "loop exit " << loop_exit << " in " << std::fixed << took << "s, star exit " << star_exit
     << (names_subterm ? " with Mismatch" : " WITHOUT Mismatch");
  detail = os.str();
  return loop_exit == 2 && took < kLoopBudget && star_exit == 1 && names_subterm;
}

// ---------------------------------------------------------------- criterion 7

bool internal_suite(const std::vector<GoalCase>& cases, bool suites_pass, std::string& detail) {
  int proved = 0;
  std::string first_failure;
  for (const GoalCase& c : cases) {
    if (c.reflection.status != Status::Proved) continue;
    WitnessReport rep = check_extensionality_internal(reflect_context(c.ctx),
                                                      c.reflection.witness, reflect(c.type));
    if (rep.status == Status::Proved) {
      ++proved;
    } else if (first_failure.empty()) {
      first_failure =
          c.file + (rep.diagnostics.empty() ? "" : ": " + rep.diagnostics.front());
    }
  }
  TowerReport tower = check_tower_identity();
  std::ostringstream os;
  os << proved << "/" << cases.size() << " transported, tower "
     << (tower.ok() ? "closed" : "OPEN") << ", suites 1-6 "
     << (suites_pass ? "green" : "RED");
  if (!first_failure.empty()) os << "; first failure " << first_failure;
  if (!tower.diagnostics.empty()) os << "; tower: " << tower.diagnostics.front();
  detail = os.str();
  return proved == static_cast<int>(cases.size()) && tower.ok() && suites_pass;
}

}  // namespace

int main() {
  std::vector<GoalCase> cases;
  const char* names[7] = {
      "reflection corpus",      "extensionality corpus", "substitution lemmas",
      "conversion preservation", "golden unfoldings",     "robustness",
      "internal mode"};
  bool ok[7] = {};
  std::string detail[7];

  auto guard = [&](int i, auto&& fn) {
    try {
      ok[i] = fn(detail[i]);
    } catch (const std::exception& e) {
      ok[i] = false;
      detail[i] = std::string("unexpected exception: ") + e.what();
    }
  };

  guard(0, [&](std::string& d) { return reflection_suite(cases, d); });
  guard(1, [&](std::string& d) { return extensionality_suite(cases, d); });
  guard(2, [&](std::string& d) { return substitution_suite(d); });
  guard(3, [&](std::string& d) { return conversion_suite(d); });
  guard(4, [&](std::string& d) { return golden_suite(d); });
  guard(5, [&](std::string& d) { return robustness_suite(d); });
  bool first_six = ok[0] && ok[1] && ok[2] && ok[3] && ok[4] && ok[5];
  guard(6, [&](std::string& d) { return internal_suite(cases, first_six, d); });

  int failures = 0;
  for (int i = 0; i < 7; ++i) {
    if (!ok[i]) ++failures;
    std::printf("[%s] %d. %s: %s\n", ok[i] ? "PASS" : "FAIL", i + 1, names[i],
                detail[i].c_str());
  }
  return failures;
}

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "eqs/eqs.h"

namespace {

struct Context {
  eqs_context* ctx = nullptr;
  Context() {
    if (eqs_context_new(&ctx) != EQS_OK) throw std::runtime_error("cannot create context");
  }
  ~Context() { eqs_context_free(ctx); }
};

bool split_pair(const std::string& s, std::string& key, long long& value) {
  auto eq = s.find('=');
  if (eq == std::string::npos) return false;
  key = s.substr(0, eq);
  try {
    std::size_t used = 0;
    value = std::stoll(s.substr(eq + 1), &used);
    return used == s.size() - eq - 1;
  } catch (const std::exception&) {
    return false;
  }
}

// Prints the result or the error and returns the process exit code.
int finish(eqs_context* ctx, eqs_status st, eqs_result*& res) {
  if (res != nullptr) {
    std::fputs(eqs_result_text(res), stdout);
    if (st == EQS_MISMATCH) std::fprintf(stderr, "first counterexample: %s\n", eqs_result_witness(res));
    eqs_result_free(res);
    res = nullptr;
  } else {
    std::fprintf(stderr, "error: %s\n", eqs_last_error(ctx));
  }
  return static_cast<int>(st);
}

int list_suites() {
  for (std::size_t i = 0; i < eqs_suite_count(); ++i) {
    std::printf("%s  %s\n", eqs_suite_id(i), eqs_suite_summary(i));
    const char* name = nullptr;
    long long value = 0;
    for (std::size_t b = 0; eqs_suite_bound(i, b, &name, &value); ++b) std::printf("    --bound %s=%lld\n", name, value);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eulerian quasisymmetric functions, permutation statistics and Rees products"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eqs_version()));

  std::string format = "text";
  std::vector<std::string> caps;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cap", caps, "Override a cap, e.g. perm_n=12 (also EQS_CAPS)");

  std::string perm;
  auto* stats = app.add_subcommand("stats", "Statistics of a permutation");
  stats->add_option("perm", perm, "One-line notation")->required();

  std::string table_kind, family = "boolean";
  int n = -1, q = 2, j = 0, k = -1;
  bool all_j = false;
  auto* table = app.add_subcommand("table", "Tables: char, qeuler, whitney, dims");
  table->add_option("kind", table_kind)->required()->check(CLI::IsMember({"char", "qeuler", "whitney", "dims"}));
  table->add_option("--n", n, "Size")->required();
  table->add_option("--family", family, "Poset family for whitney");
  table->add_option("--q", q, "Field size");
  table->add_flag("--all-j", all_j, "Every excedance count in char tables");

  std::string object, lambda, basis = "h";
  auto* expand = app.add_subcommand("expand", "Expand Q_{λ,j}, Q_{n,j} or Q_{n,j,k} in a basis");
  expand->add_option("object", object)->required();
  expand->add_option("--lambda", lambda, "Cycle type, e.g. 6 or 3,2,1");
  expand->add_option("--n", n, "Degree when no cycle type is given");
  expand->add_option("--j", j, "Number of excedances")->required();
  expand->add_option("--k", k, "Number of fixed points");
  expand->add_option("--basis", basis)->check(CLI::IsMember({"m", "h", "e", "p", "s"}));

  std::string suite;
  std::vector<std::string> bounds;
  long long zmax = -1, pmax = -1, nmax = -1, tmax = -1, seed = -1;
  auto* verify = app.add_subcommand("verify", "Run a verification suite ('list' shows them, 'all' runs every one)");
  verify->add_option("suite", suite)->required();
  verify->add_option("--bound", bounds, "Override a suite bound, e.g. nmax=6");
  verify->add_option("--zmax", zmax, "Shortcut for --bound zmax=");
  verify->add_option("--pmax", pmax, "Shortcut for --bound pmax=");
  verify->add_option("--nmax", nmax, "Shortcut for --bound nmax=");
  verify->add_option("--tmax", tmax, "Shortcut for --bound tmax=");
  verify->add_option("--seed", seed, "Shortcut for --bound seed=");

  std::string map, input, extra;
  auto* biject = app.add_subcommand("biject", "Apply a bijection: phi, eta, gamma, lyndon, incfact, grphi, greta");
  biject->add_option("map", map)
      ->required()
      ->check(CLI::IsMember({"phi", "eta", "gamma", "lyndon", "incfact", "grphi", "greta"}));
  biject->add_option("input", input, "Word, permutation or ornament; barred letters as 7'")->required();
  biject->add_option("--s", extra, "Compatible sequence for grphi, e.g. 7,7,5");

  std::string poset_kind;
  auto* poset = app.add_subcommand("poset", "Möbius invariants: mobius, rees, ideal");
  poset->add_option("kind", poset_kind)->required()->check(CLI::IsMember({"mobius", "rees", "ideal"}));
  poset->add_option("--family", family, "boolean, subspace, isotropic, crosspolytope, chain");
  poset->add_option("--n", n, "Rank or dimension")->required();
  poset->add_option("--q", q, "Field size");
  poset->add_option("--j", j, "Ideal index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return EQS_USAGE;
  }

  Context c;
  eqs_format fmt = format == "json" ? EQS_FORMAT_JSON : format == "csv" ? EQS_FORMAT_CSV : EQS_FORMAT_TEXT;
  eqs_set_format(c.ctx, fmt);
  for (const auto& s : caps) {
    std::string key;
    long long value = 0;
    if (!split_pair(s, key, value) || eqs_set_cap(c.ctx, key.c_str(), value) != EQS_OK) {
      std::fprintf(stderr, "error: bad cap '%s' %s\n", s.c_str(), eqs_last_error(c.ctx));
      return EQS_USAGE;
    }
  }

  eqs_result* res = nullptr;
  if (*stats) return finish(c.ctx, eqs_stats(c.ctx, perm.c_str(), &res), res);
  if (*table)
    return finish(c.ctx, eqs_table(c.ctx, table_kind.c_str(), n, family.c_str(), q, all_j ? 1 : 0, &res), res);
  if (*expand)
    return finish(c.ctx,
                  eqs_expand(c.ctx, object.c_str(), lambda.empty() ? nullptr : lambda.c_str(), n, j, k,
                             basis.c_str(), &res),
                  res);
  if (*biject)
    return finish(c.ctx, eqs_biject(c.ctx, map.c_str(), input.c_str(), extra.empty() ? nullptr : extra.c_str(), &res),
                  res);
  if (*poset) return finish(c.ctx, eqs_poset(c.ctx, poset_kind.c_str(), family.c_str(), n, q, j, &res), res);

  // verify
  if (suite == "list") return list_suites();
  std::map<std::string, long long> overrides;
  for (const auto& s : bounds) {
    std::string key;
    long long value = 0;
    if (!split_pair(s, key, value)) {
      std::fprintf(stderr, "error: bounds are written key=value, got '%s'\n", s.c_str());
      return EQS_USAGE;
    }
    overrides[key] = value;
  }
  const std::pair<const char*, long long> short_flags[] = {
      {"zmax", zmax}, {"pmax", pmax}, {"nmax", nmax}, {"tmax", tmax}, {"seed", seed}};
  for (const auto& [key, value] : short_flags)
    if (value >= 0) overrides[key] = value;

  std::vector<std::string> ids;
  if (suite == "all") {
    if (!overrides.empty()) {
      std::fprintf(stderr, "error: bounds cannot be combined with 'all'\n");
      return EQS_USAGE;
    }
    for (std::size_t i = 0; i < eqs_suite_count(); ++i) ids.emplace_back(eqs_suite_id(i));
  } else {
    ids.push_back(suite);
  }
  int worst = 0;
  for (const auto& id : ids) {
    for (const auto& [key, value] : overrides) eqs_set_bound(c.ctx, key.c_str(), value);
    int code = finish(c.ctx, eqs_verify(c.ctx, id.c_str(), &res), res);
    if (code != 0 && (worst == 0 || code > worst)) worst = code;
  }
  return worst;
}

#include "eqs/eqs.h"

#include <algorithm>
#include <exception>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "eqs/bijections.hpp"
#include "eqs/combinatorics.hpp"
#include "eqs/eulerian.hpp"
#include "eqs/genfun.hpp"
#include "eqs/poset.hpp"
#include "eqs/registry.hpp"
#include "eqs/shelling.hpp"
#include "eqs/sym.hpp"

#ifndef EQS_VERSION_STRING
#define EQS_VERSION_STRING "0.0.0"
#endif

using json = nlohmann::ordered_json;

struct eqs_context {
  eqs::Caps caps = eqs::Caps::defaults_from_env();
  eqs_format format = EQS_FORMAT_TEXT;
  eqs::Bounds bounds;
  std::string error;
};

struct eqs_result {
  eqs_status status = EQS_OK;
  std::string text;
  std::string witness;
};

namespace {

using namespace eqs;

// Rows of strings with a header, rendered in any of the three formats.
struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string render(const Table& t, eqs_format f) {
  std::ostringstream os;
  if (f == EQS_FORMAT_CSV) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
      os << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return os.str();
  }
  if (f == EQS_FORMAT_JSON) {
    json j;
    j["table"] = t.title;
    j["columns"] = t.header;
    j["rows"] = t.rows;
    j["version"] = EQS_VERSION_STRING;
    return j.dump(2) + "\n";
  }
  std::vector<std::size_t> width(t.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  grow(t.header);
  for (const auto& r : t.rows) grow(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::string cell = cells[i];
      if (i + 1 < cells.size()) cell.resize(width[i], ' ');
      s += (i ? "  " : "") + cell;
    }
    os << s << "\n";
  };
  if (!t.title.empty()) os << t.title << "\n";
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

json word_json(const Word& w) {
  json a = json::array();
  for (const Letter& l : w) a.push_back({{"value", l.value}, {"barred", l.barred}});
  return a;
}

std::string seq_text(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::string buf(text);
  for (char& c : buf)
    if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  std::istringstream ss(buf);
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw DomainError("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Ornament parse_ornament(std::string_view text) {
  std::vector<Word> necklaces;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw DomainError("ornaments are written as (w1)(w2)...");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw DomainError("unclosed necklace");
    necklaces.push_back(parse_word(text.substr(i + 1, close - i - 1)));
    i = close + 1;
  }
  return Ornament(necklaces);
}

// "2^2 1^2" style, as in printed character tables.
std::string exp_notation(const Partition& lam) {
  std::string out;
  const auto& parts = lam.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t k = i;
    while (k < parts.size() && parts[k] == parts[i]) ++k;
    if (!out.empty()) out += ' ';
    out += std::to_string(parts[i]);
    if (k - i > 1) out += "^" + std::to_string(k - i);
    i = k;
  }
  return out;
}

// Fewer parts first, then lexicographically decreasing.
std::vector<Partition> table_order(int n) {
  auto ps = partitions(n);
  std::stable_sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) { return a.length() < b.length(); });
  return ps;
}

std::string coeff_prefix(const MPoly& c, bool first, std::string& sign) {
  sign = first ? "" : " + ";
  if (c.is_constant()) {
    Rational v = c.constant_term();
    if (v < 0) {
      sign = first ? "-" : " - ";
      v = -v;
    }
    if (v == 1) return "";
    return v.get_str() + " ";
  }
  return "(" + c.str() + ") ";
}

// "3 s[6] + 3 s[5,1] - h[4,1,1]"
std::string expansion_text(const SymElem& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    std::string sign;
    std::string c = coeff_prefix(it->second, first, sign);
    out += sign + c + basis_name(f.basis()) + it->first.str();
    first = false;
  }
  return out;
}

Poset family_poset(const std::string& family, int n, int q) {
  if (family == "boolean") return boolean_lattice(n);
  if (family == "subspace") return subspace_lattice(q, n);
  if (family == "isotropic") return isotropic_lattice(q, n);
  if (family == "crosspolytope") return crosspolytope(n);
  if (family == "chain") return chain(n + 1);
  throw DomainError("unknown poset family '" + family + "' (boolean, subspace, isotropic, crosspolytope, chain)");
}

std::string report_text(const Report& rep, eqs_format f) {
  if (f == EQS_FORMAT_JSON) {
    json j;
    j["suite"] = rep.suite;
    if (!rep.note.empty()) j["note"] = rep.note;
    j["items"] = json::array();
    for (const auto& it : rep.items) {
      json item;
      item["id"] = it.id;
      json params = json::object();
      for (const auto& [k, v] : it.params) params[k] = v;
      item["params"] = params;
      item["status"] = status_name(it.status);
      if (!it.witness.empty()) item["witness"] = it.witness;
      j["items"].push_back(item);
    }
    j["version"] = EQS_VERSION_STRING;
    return j.dump(2) + "\n";
  }
  if (f == EQS_FORMAT_CSV) {
    Table t{rep.suite, {"id", "params", "status", "witness"}, {}};
    for (const auto& it : rep.items) {
      std::string ps;
      for (const auto& [k, v] : it.params) ps += (ps.empty() ? "" : " ") + k + "=" + v;
      t.rows.push_back({it.id, ps, status_name(it.status), it.witness});
    }
    return render(t, EQS_FORMAT_CSV);
  }
  std::ostringstream os;
  os << "suite " << rep.suite << "\n";
  if (!rep.note.empty()) os << "note: " << rep.note << "\n";
  std::size_t failed = 0;
  for (const auto& it : rep.items) {
    bool bad = it.status == Status::Fail || it.status == Status::Counterexample;
    failed += bad;
    os << "  " << status_name(it.status) << "  " << it.id;
    for (const auto& [k, v] : it.params) os << " " << k << "=" << v;
    os << "\n";
    if (bad && !it.witness.empty()) os << "      witness: " << it.witness << "\n";
  }
  os << rep.items.size() << " items, " << failed << " failed\n";
  return os.str();
}

template <class Fn>
eqs_status guarded(eqs_context* ctx, eqs_result** out, Fn fn) {
  if (ctx == nullptr || out == nullptr) return EQS_USAGE;
  *out = nullptr;
  ctx->error.clear();
  auto res = std::make_unique<eqs_result>();
  try {
    ScopedCaps scope(ctx->caps);
    fn(*res);
  } catch (const CapExceeded& e) {
    ctx->error = e.what();
    return EQS_CAP;
  } catch (const std::invalid_argument& e) {
    ctx->error = e.what();
    return EQS_USAGE;
  } catch (const std::out_of_range& e) {
    ctx->error = e.what();
    return EQS_USAGE;
  } catch (const std::exception& e) {
    ctx->error = std::string("internal error: ") + e.what();
    return EQS_INTERNAL;
  } catch (...) {
    ctx->error = "internal error";
    return EQS_INTERNAL;
  }
  eqs_status st = res->status;
  *out = res.release();
  return st;
}

std::string need(const char* s, const char* what) {
  if (s == nullptr || *s == '\0') throw DomainError(std::string("missing ") + what);
  return s;
}

}  // namespace

extern "C" {

const char* eqs_version(void) { return EQS_VERSION_STRING; }

eqs_status eqs_context_new(eqs_context** out) {
  if (out == nullptr) return EQS_USAGE;
  try {
    *out = new eqs_context();
  } catch (...) {
    *out = nullptr;
    return EQS_INTERNAL;
  }
  return EQS_OK;
}

void eqs_context_free(eqs_context* ctx) { delete ctx; }

eqs_status eqs_set_format(eqs_context* ctx, eqs_format format) {
  if (ctx == nullptr) return EQS_USAGE;
  if (format != EQS_FORMAT_TEXT && format != EQS_FORMAT_JSON && format != EQS_FORMAT_CSV) {
    ctx->error = "unknown format";
    return EQS_USAGE;
  }
  ctx->format = format;
  return EQS_OK;
}

eqs_status eqs_set_cap(eqs_context* ctx, const char* key, long long value) {
  if (ctx == nullptr) return EQS_USAGE;
  std::string k = key ? key : "";
  if (value < 0 || value > 1000000) {
    ctx->error = "cap value out of range";
    return EQS_USAGE;
  }
  int v = static_cast<int>(value);
  if (k == "perm_n") ctx->caps.perm_n = v;
  else if (k == "sym_degree") ctx->caps.sym_degree = v;
  else if (k == "q_degree") ctx->caps.q_degree = v;
  else if (k == "series_order") ctx->caps.series_order = v;
  else if (k == "poset_elements") ctx->caps.poset_elements = v;
  else {
    ctx->error = "unknown cap '" + k + "' (perm_n, sym_degree, q_degree, series_order, poset_elements)";
    return EQS_USAGE;
  }
  return EQS_OK;
}

const char* eqs_last_error(const eqs_context* ctx) { return ctx ? ctx->error.c_str() : "no context"; }

size_t eqs_suite_count(void) { return suite_registry().size(); }

const char* eqs_suite_id(size_t index) {
  const auto& r = suite_registry();
  return index < r.size() ? r[index].id.c_str() : nullptr;
}

const char* eqs_suite_summary(size_t index) {
  const auto& r = suite_registry();
  return index < r.size() ? r[index].summary.c_str() : nullptr;
}

int eqs_suite_bound(size_t index, size_t bound, const char** name, long long* value) {
  const auto& r = suite_registry();
  if (index >= r.size() || bound >= r[index].bounds.size()) return 0;
  if (name) *name = r[index].bounds[bound].name.c_str();
  if (value) *value = r[index].bounds[bound].value;
  return 1;
}

eqs_status eqs_set_bound(eqs_context* ctx, const char* name, long long value) {
  if (ctx == nullptr || name == nullptr) return EQS_USAGE;
  ctx->bounds[name] = value;
  return EQS_OK;
}

eqs_status eqs_verify(eqs_context* ctx, const char* suite_id, eqs_result** out) {
  eqs::Bounds bounds;
  if (ctx) bounds.swap(ctx->bounds);
  return guarded(ctx, out, [&](eqs_result& res) {
    std::string id = need(suite_id, "suite id");
    const SuiteSpec* spec = find_suite(id);
    if (spec == nullptr) throw DomainError("unknown suite '" + id + "'");
    Report rep = run_suite(*spec, bounds);
    res.text = report_text(rep, ctx->format);
    if (const ReportItem* bad = rep.first_failure()) {
      res.status = EQS_MISMATCH;
      res.witness = bad->id;
      for (const auto& [k, v] : bad->params) res.witness += " " + k + "=" + v;
      if (!bad->witness.empty()) res.witness += ": " + bad->witness;
    }
  });
}

eqs_status eqs_stats(eqs_context* ctx, const char* perm, eqs_result** out) {
  return guarded(ctx, out, [&](eqs_result& res) {
    Permutation p = Permutation::parse(need(perm, "permutation"));
    check_cap("perm_n", p.size(), ctx->caps.perm_n);
    StatRecord s = statistics(p);
    const auto& w = p.one_line();
    Table t{"", {"statistic", "value"}, {}};
    auto add = [&](std::string k, std::string v) { t.rows.push_back({std::move(k), std::move(v)}); };
    add("perm", p.str());
    add("cycles", p.cycle_str());
    add("cycle_type", cycle_type(p).str());
    add("des", std::to_string(s.des));
    add("exc", std::to_string(s.exc));
    add("maj", std::to_string(s.maj));
    add("comaj", std::to_string(s.comaj));
    add("inv", std::to_string(s.inv));
    add("fix", std::to_string(s.fix));
    add("aid", std::to_string(aid(w)));
    add("Des", subset_str(s.Des));
    add("Exc", subset_str(s.Exc));
    add("Exd", subset_str(s.Exd));
    if (ctx->format == EQS_FORMAT_JSON) {
      json j;
      for (const auto& r : t.rows) {
        bool numeric = r[0] != "perm" && r[0] != "cycles" && r[0] != "cycle_type" && r[0] != "Des" &&
                       r[0] != "Exc" && r[0] != "Exd";
        if (numeric) j[r[0]] = std::stoi(r[1]);
        else j[r[0]] = r[1];
      }
      j["one_line"] = w;
      j["version"] = EQS_VERSION_STRING;
      res.text = j.dump(2) + "\n";
    } else if (ctx->format == EQS_FORMAT_CSV) {
      res.text = render(t, EQS_FORMAT_CSV);
    } else {
      std::ostringstream os;
      for (const auto& r : t.rows) os << r[0] << " " << r[1] << "\n";
      res.text = os.str();
    }
  });
}

eqs_status eqs_table(eqs_context* ctx, const char* kind, int n, const char* family, int q, int all_j,
                     eqs_result** out) {
  return guarded(ctx, out, [&](eqs_result& res) {
    std::string k = need(kind, "table kind");
    if (n < 0) throw DomainError("n must be nonnegative");
    Table t;
    if (k == "char") {
      check_cap("perm_n", n, ctx->caps.perm_n);
      CharTable ct = char_table(n);
      int lo = all_j ? 0 : 1, hi = all_j ? n - 1 : n / 2;
      t.title = "characters of Q_{(" + std::to_string(n) + "),j}";
      t.header.push_back("class");
      for (int j = lo; j <= hi; ++j) t.header.push_back(std::to_string(n) + "," + std::to_string(j));
      for (const Partition& lam : table_order(n)) {
        auto row = std::find(ct.rows.begin(), ct.rows.end(), lam) - ct.rows.begin();
        std::vector<std::string> cells{exp_notation(lam)};
        for (int j = lo; j <= hi; ++j)
          cells.push_back(ct.values[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)].get_str());
        t.rows.push_back(std::move(cells));
      }
    } else if (k == "qeuler") {
      check_cap("perm_n", n, ctx->caps.perm_n);
      MPoly f = joint_enumerator(n, {{Stat::Maj, Var::q}, {Stat::Des, Var::p}, {Stat::Exc, Var::t}});
      t.title = "Σ q^maj p^des over exc = j, n = " + std::to_string(n);
      t.header = {"j", "q^maj p^des", "q^maj"};
      for (const auto& [j, c] : t_coefficients(f)) {
        MPoly at_p1 = c.substitute(Var::p, 1L);
        t.rows.push_back({std::to_string(j), c.str(), at_p1.str()});
      }
    } else if (k == "whitney") {
      std::string fam = family ? family : "boolean";
      Poset p = family_poset(fam, n, q);
      t.title = "Whitney numbers: " + fam + " n=" + std::to_string(n) +
                (fam == "subspace" || fam == "isotropic" ? " q=" + std::to_string(q) : "");
      t.header = {"rank", "elements"};
      auto w = p.whitney();
      for (std::size_t r = 0; r < w.size(); ++r) t.rows.push_back({std::to_string(r), std::to_string(w[r])});
    } else if (k == "dims") {
      check_cap("perm_n", n, ctx->caps.perm_n);
      t.title = "dimensions of Q_{λ,j}, n = " + std::to_string(n);
      t.header.push_back("λ");
      for (int j = 0; j < std::max(n, 1); ++j) t.header.push_back("j=" + std::to_string(j));
      Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
      for (const Partition& lam : table_order(n)) {
        std::vector<std::string> cells{exp_notation(lam)};
        for (int j = 0; j < std::max(n, 1); ++j)
          cells.push_back(character_value(eulerian_sym(lam, j), ones).get_str());
        t.rows.push_back(std::move(cells));
      }
    } else {
      throw DomainError("unknown table '" + k + "' (char, qeuler, whitney, dims)");
    }
    res.text = render(t, ctx->format);
  });
}

eqs_status eqs_expand(eqs_context* ctx, const char* object, const char* lambda, int n, int j, int k,
                      const char* basis, eqs_result** out) {
  return guarded(ctx, out, [&](eqs_result& res) {
    std::string obj = need(object, "object");
    if (obj != "Q") throw DomainError("unknown object '" + obj + "' (Q)");
    Basis b = parse_basis(basis ? basis : "h");
    SymElem f;
    std::string name;
    if (lambda != nullptr && *lambda != '\0') {
      Partition lam = Partition::parse(lambda);
      check_cap("sym_degree", lam.size(), ctx->caps.sym_degree);
      f = eulerian_sym(lam, j);
      name = "Q_{" + lam.str() + "," + std::to_string(j) + "}";
    } else {
      if (n < 0) throw DomainError("give --lambda or --n");
      check_cap("sym_degree", n, ctx->caps.sym_degree);
      f = k >= 0 ? eulerian_sym(n, j, k) : eulerian_sym(n, j);
      name = "Q_{" + std::to_string(n) + "," + std::to_string(j) + (k >= 0 ? "," + std::to_string(k) : "") + "}";
    }
    f = convert(f, b);
    if (ctx->format == EQS_FORMAT_TEXT) {
      res.text = expansion_text(f) + "\n";
      return;
    }
    Table t{name, {"partition", "coefficient"}, {}};
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
      t.rows.push_back({it->first.str(), it->second.str()});
    if (ctx->format == EQS_FORMAT_CSV) {
      res.text = render(t, EQS_FORMAT_CSV);
      return;
    }
    json jo;
    jo["object"] = name;
    jo["basis"] = basis_name(b);
    jo["terms"] = json::array();
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
      jo["terms"].push_back({{"partition", it->first.parts()}, {"coefficient", it->second.str()}});
    jo["version"] = EQS_VERSION_STRING;
    res.text = jo.dump(2) + "\n";
  });
}

eqs_status eqs_biject(eqs_context* ctx, const char* map, const char* input, const char* extra,
                      eqs_result** out) {
  return guarded(ctx, out, [&](eqs_result& res) {
    std::string m = need(map, "map");
    std::string in = need(input, "input");
    std::string text;
    json j;
    j["map"] = m;
    j["input"] = in;
    auto words_out = [&](const std::vector<Word>& ws, const std::string& sep) {
      json a = json::array();
      std::string s;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        a.push_back(word_json(ws[i]));
        s += (i ? sep : "") + word_str(ws[i]);
      }
      j["output"] = a;
      text = s;
    };
    if (m == "phi") {
      Word w = parse_word(in);
      auto sigma = phi_map(w);
      j["output"] = sigma;
      text = Permutation(sigma).str();
    } else if (m == "eta") {
      Permutation p = Permutation::parse(in);
      Word w = psi_map(p.one_line());
      j["output"] = word_json(w);
      text = word_str(w);
    } else if (m == "gamma") {
      Word w = parse_word(in);
      if (!is_banner(w)) throw DomainError("not a banner");
      GammaImage g = gamma(w);
      j["output"] = {{"banner", word_json(g.banner)}, {"omega", g.marked.omega}, {"mark", g.marked.mark}};
      text = word_str(g.banner) + " " + seq_text(g.marked.omega) + " mark " + std::to_string(g.marked.mark);
    } else if (m == "lyndon") {
      words_out(lyndon_factorization(parse_word(in)), ".");
    } else if (m == "incfact") {
      auto f = increasing_factorization(parse_word(in));
      if (!f) {
        j["output"] = nullptr;
        text = "none";
      } else {
        words_out(*f, ".");
      }
    } else if (m == "grphi") {
      Permutation p = Permutation::parse(in);
      std::vector<int> s = parse_ints(need(extra, "compatible sequence"));
      if (!is_compatible(p, s)) throw DomainError("sequence is not compatible with the permutation");
      Ornament r = gr_phi(p, s);
      words_out(r.necklaces(), "");
      text = r.str();
    } else if (m == "greta") {
      auto [p, s] = gr_eta(parse_ornament(in));
      j["output"] = {{"perm", p.one_line()}, {"sequence", s}};
      text = p.str() + " " + seq_text(s);
    } else {
      throw DomainError("unknown map '" + m + "' (phi, eta, gamma, lyndon, incfact, grphi, greta)");
    }
    if (ctx->format == EQS_FORMAT_JSON) {
      j["version"] = EQS_VERSION_STRING;
      res.text = j.dump(2) + "\n";
    } else if (ctx->format == EQS_FORMAT_CSV) {
      res.text = render(Table{"", {"map", "input", "output"}, {{m, in, text}}}, EQS_FORMAT_CSV);
    } else {
      res.text = text + "\n";
    }
  });
}

eqs_status eqs_poset(eqs_context* ctx, const char* kind, const char* family, int n, int q, int j,
                     eqs_result** out) {
  return guarded(ctx, out, [&](eqs_result& res) {
    std::string k = need(kind, "poset command");
    std::string fam = need(family, "poset family");
    if (n < 0) throw DomainError("n must be nonnegative");
    Poset p = family_poset(fam, n, q);
    Integer mu;
    std::string what;
    if (k == "mobius") {
      mu = p.bounded() ? p.mu_bounded() : hat(p).mu_bounded();
      what = p.bounded() ? "mu(P)" : "mu(hat P)";
    } else if (k == "rees") {
      mu = rees_chain_mobius(p);
      what = "mu(hat(P- * C_n))";
    } else if (k == "ideal") {
      mu = ideal_mobius(p, j);
      what = "mu(hat I_" + std::to_string(j) + "(P))";
    } else {
      throw DomainError("unknown poset command '" + k + "' (mobius, rees, ideal)");
    }
    if (ctx->format == EQS_FORMAT_JSON) {
      json jo;
      jo["command"] = k;
      jo["family"] = fam;
      jo["n"] = n;
      if (fam == "subspace" || fam == "isotropic") jo["q"] = q;
      if (k == "ideal") jo["j"] = j;
      jo["elements"] = p.size();
      jo["mobius"] = mu.get_str();
      jo["version"] = EQS_VERSION_STRING;
      res.text = jo.dump(2) + "\n";
    } else if (ctx->format == EQS_FORMAT_CSV) {
      res.text = render(Table{"", {"quantity", "value"}, {{what, mu.get_str()}}}, EQS_FORMAT_CSV);
    } else {
      res.text = what + " = " + mu.get_str() + "\n";
    }
  });
}

const char* eqs_result_text(const eqs_result* res) { return res ? res->text.c_str() : ""; }
const char* eqs_result_witness(const eqs_result* res) { return res ? res->witness.c_str() : ""; }
eqs_status eqs_result_status(const eqs_result* res) { return res ? res->status : EQS_USAGE; }
void eqs_result_free(eqs_result* res) { delete res; }

}  // extern "C"

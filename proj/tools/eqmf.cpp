// Command-line surface for the extremal quasimodular form library.
//
// Subcommands: expand, scan, prove, atkin, moments, table, congruence,
// basis.  Exit codes: 0 success/pass, 1 verification failure, 2 usage
// error.  All output is exact and deterministic.

#include "eqmf/congruence.hpp"
#include "eqmf/extremal.hpp"
#include "eqmf/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace eqmf;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Renders n nonzero terms of a q-expansion starting at the leading
// exponent.  Integer coefficients attach to the power of q; fractional
// ones are separated by a space.
std::string render_expansion(const Series& f, std::size_t n) {
  // if any rendered coefficient is fractional, separate all of them from
  // the powers of q; otherwise attach integers directly
  bool spaced = false;
  {
    std::size_t seen = 0;
    for (std::size_t e = 0; e < f.trunc() && seen < n; ++e)
      if (f[e] != 0) {
        if (!is_integer(f[e])) spaced = true;
        ++seen;
      }
  }
  std::ostringstream os;
  std::size_t shown = 0;
  bool first = true;
  for (std::size_t e = 0; e < f.trunc() && shown < n; ++e) {
    if (f[e] == 0) continue;
    Rational c = f[e];
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string pow;
    if (e == 1)
      pow = "q";
    else if (e > 1)
      pow = "q^" + std::to_string(e);
    if (pow.empty()) {
      os << rat_str(c);
    } else if (c == 1) {
      os << pow;
    } else {
      os << rat_str(c) << (spaced ? " " : "") << pow;
    }
    ++shown;
  }
  if (first) os << "0";
  return os.str();
}

std::string compact(std::string s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out.push_back(c);
  return out;
}

std::string factor_str(const std::vector<std::pair<std::int64_t, int>>& fs) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : fs) {
    if (!first) os << "·";
    first = false;
    os << p;
    if (e > 1) os << "^" << e;
  }
  if (first) os << "1";
  return os.str();
}

Series expansion_for(const std::string& form, long w, int r,
                     std::size_t terms) {
  if (form == "E2") return eisenstein(2, terms + 1);
  if (form == "E4") return eisenstein(4, terms + 1);
  if (form == "E6") return eisenstein(6, terms + 1);
  if (form == "delta") return delta_series(terms + 2);
  if (form == "jinv") return j_inverse(terms + 2);
  if (form == "G") {
    if (r < 1 || r > 5) throw UsageError("depth must be between 1 and 5");
    std::size_t v = static_cast<std::size_t>(dim_qm(w, r) > 0
                                                 ? dim_qm(w, r) - 1
                                                 : 0);
    std::size_t n = v + terms + 8;
    if (r == 1) return extremal_depth1_hypergeometric(w, n).q_expansion;
    return extremal_generic(w, r, n).q_expansion;
  }
  throw UsageError("unknown form '" + form + "'");
}

void emit(const std::string& text, const json& record,
          const std::string& format, const std::string& out_path) {
  std::string payload =
      (format == "json") ? record.dump(2) + "\n" : text + "\n";
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file '" + out_path + "'");
    out << payload;
  }
}

json dense_coeffs(const Series& f, std::size_t upto) {
  json a = json::array();
  for (std::size_t i = 0; i <= upto && i < f.trunc(); ++i)
    a.push_back(rat_str(f[i]));
  return a;
}

int cmd_expand(const std::vector<std::string>& spec, std::size_t n,
               const std::string& format, const std::string& out) {
  if (spec.empty()) throw UsageError("expand: missing form spec");
  std::string form = spec[0];
  long w = 0;
  int r = 1;
  if (form == "G") {
    if (spec.size() < 2) throw UsageError("expand G: missing weight");
    w = std::stol(spec[1]);
    r = spec.size() > 2 ? std::stoi(spec[2]) : 1;
  } else if (spec.size() > 1) {
    throw UsageError("expand: unexpected extra arguments");
  }
  Series f = expansion_for(form, w, r, n);
  std::string text = render_expansion(f, n);
  // last exponent actually rendered
  std::size_t last = 0, shown = 0;
  for (std::size_t e = 0; e < f.trunc() && shown < n; ++e)
    if (f[e] != 0) {
      last = e;
      ++shown;
    }
  json rec{{"object", "expand"},
           {"params",
            {{"form", form}, {"w", w}, {"r", r}, {"n", n}}},
           {"coeffs", dense_coeffs(f, last)},
           {"verdicts", json::array()}};
  emit(text, rec, format, out);
  return 0;
}

int cmd_scan(long wmax, int depth, std::size_t n, const std::string& format,
             const std::string& out) {
  if (wmax < 2 || wmax % 2 != 0) throw UsageError("scan: wmax must be even");
  if (depth < 1 || depth > 5)
    throw UsageError("scan: depth must be between 1 and 5");
  std::ostringstream os;
  json verdicts = json::array();
  std::vector<long> integral;
  for (long w = 2; w <= wmax; w += 2) {
    ScanRow row{w, false, false, {}, -1};
    try {
      row = scan_one(w, depth, n);
    } catch (const ExtremalError&) {
      row = {w, false, false, {}, -1};
    }
    if (!row.exists) {
      os << "w=" << w << " -\n";
      verdicts.push_back({{"w", w}, {"exists", false}});
      continue;
    }
    if (row.integral) {
      os << "w=" << w << " integral\n";
      integral.push_back(w);
      verdicts.push_back(
          {{"w", w}, {"exists", true}, {"integral", true}});
    } else {
      os << "w=" << w << " non-integral first_bad=" << row.first_bad_exponent
         << " primes=";
      json primes = json::array();
      for (std::size_t i = 0; i < row.denominator_primes.size(); ++i) {
        if (i) os << ",";
        os << row.denominator_primes[i];
        primes.push_back(row.denominator_primes[i].get_str());
      }
      os << "\n";
      verdicts.push_back({{"w", w},
                          {"exists", true},
                          {"integral", false},
                          {"first_bad", row.first_bad_exponent},
                          {"primes", primes}});
    }
  }
  os << "{";
  for (std::size_t i = 0; i < integral.size(); ++i) {
    if (i) os << ", ";
    os << integral[i];
  }
  os << "}";
  json rec{{"object", "scan"},
           {"params", {{"wmax", wmax}, {"depth", depth}, {"n", n}}},
           {"coeffs", json::array()},
           {"verdicts", verdicts}};
  emit(os.str(), rec, format, out);
  return 0;
}

int cmd_prove(long w, std::size_t n, const std::string& format,
              const std::string& out) {
  CongruenceReport rep = verify_main_theorem_case(w, n);
  std::ostringstream os;
  os << "w=" << w << " family (m,a)=(" << rep.m << "," << rep.a
     << ") C*N=" << rep.cn << "\n";
  json verdicts = json::array();
  for (const auto& v : rep.verdicts) {
    os << "  " << v.p;
    if (v.exponent > 1) os << "^" << v.exponent;
    os << ": proof " << (v.proof_pass ? "ok" : "FAIL") << ", series "
       << (v.series_pass ? "ok" : "FAIL");
    if (!v.series_pass) os << " at index " << v.failed_index;
    os << "\n";
    verdicts.push_back({{"p", v.p},
                        {"e", v.exponent},
                        {"proof", v.proof_pass},
                        {"series", v.series_pass},
                        {"failed_index", v.failed_index}});
  }
  if (rep.pass) {
    os << "PASS, " << rep.verdicts.size() << " moduli";
  } else {
    os << "FAIL at p=";
    for (const auto& v : rep.verdicts)
      if (!v.proof_pass || !v.series_pass) {
        os << v.p;
        break;
      }
  }
  json rec{{"object", "prove"},
           {"params",
            {{"w", w},
             {"m", rep.m},
             {"a", rep.a},
             {"cn", rep.cn.get_str()},
             {"pass", rep.pass}}},
           {"coeffs", json::array()},
           {"verdicts", verdicts}};
  emit(os.str(), rec, format, out);
  return rep.pass ? 0 : 1;
}

int cmd_atkin(long m, int a, const std::string& format,
              const std::string& out) {
  AtkinData d = atkin_like(m, a);
  auto factors = factor_smooth(d.N, 1000000);
  std::ostringstream os;
  os << "A = " << compact(d.A.str()) << "; B = " << compact(d.B.str())
     << "; N = " << factor_str(factors);
  if (d.clear != 1) os << "; C = " << d.clear;
  json rec{{"object", "atkin"},
           {"params",
            {{"m", m},
             {"a", a},
             {"A", compact(d.A.str())},
             {"B", compact(d.B.str())},
             {"N", d.N.get_str()},
             {"C", d.clear.get_str()}}},
           {"coeffs", json::array()},
           {"verdicts", json::array()}};
  emit(os.str(), rec, format, out);
  return 0;
}

int cmd_moments(std::size_t n, const std::string& format,
                const std::string& out) {
  Series mom = atkin_moments(n);
  std::ostringstream os;
  json coeffs = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    if (i) os << " ";
    os << mom[i];
    coeffs.push_back(rat_str(mom[i]));
  }
  json rec{{"object", "moments"},
           {"params", {{"n", n}}},
           {"coeffs", coeffs},
           {"verdicts", json::array()}};
  emit(os.str(), rec, format, out);
  return 0;
}

int cmd_table(const std::string& which, const std::string& format,
              const std::string& out) {
  std::ostringstream os;
  json coeffs = json::array();
  if (which == "A") {
    bool first = true;
    for (const auto& row : fourier_table()) {
      if (!first) os << "\n";
      first = false;
      std::ostringstream line;
      line << row.w;
      for (int i = 0; i < 5; ++i) line << " " << row.a[i];
      os << line.str();
      coeffs.push_back(line.str());
    }
  } else if (which == "B") {
    bool first = true;
    for (const auto& e : closed_form_table()) {
      if (!first) os << "\n";
      first = false;
      std::ostringstream line;
      line << e.family << e.n << (e.halved ? " halved" : " plain")
           << " poly=";
      for (std::size_t i = 0; i < e.poly.size(); ++i) {
        if (i) line << ",";
        line << e.poly[i];
      }
      line << " shifts=" << e.sa << "," << e.sb << "," << e.sc
           << " den=" << e.den;
      os << line.str();
      coeffs.push_back(line.str());
    }
  } else {
    throw UsageError("table: expected A or B");
  }
  json rec{{"object", "table"},
           {"params", {{"which", which}}},
           {"coeffs", coeffs},
           {"verdicts", json::array()}};
  emit(os.str(), rec, format, out);
  return 0;
}

int cmd_congruence(std::size_t n, const std::string& format,
                   const std::string& out) {
  std::ostringstream os;
  json verdicts = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& what, bool ok) {
    os << what << ": " << (ok ? "ok" : "FAIL") << "\n";
    verdicts.push_back({{"check", what}, {"ok", ok}});
    all_ok = all_ok && ok;
  };
  for (const auto& e : multiplier_tables()) {
    std::ostringstream name;
    name << "multiplier " << e.p << "^" << e.s << " " << (e.for_v ? "V" : "U");
    bool ok = true;
    try {
      verify_multiplier(e, n);
      derive_multiplier(e.p, e.s, e.for_v);
    } catch (const CongruenceError&) {
      ok = false;
    }
    record(name.str(), ok);
  }
  for (auto [p, s] : std::vector<std::pair<std::int64_t, int>>{
           {2, 8}, {3, 5}, {5, 2}, {7, 2}}) {
    std::ostringstream name;
    name << "product " << p << "^" << s;
    bool ok = true;
    try {
      verify_infinite_product(p, s, n);
    } catch (const CongruenceError&) {
      ok = false;
    }
    record(name.str(), ok);
  }
  for (std::int64_t p = 2; p <= 50; ++p) {
    if (!is_prime(p)) continue;
    std::ostringstream name;
    name << "truncated multiplier p=" << p;
    bool ok = true;
    try {
      verify_truncated_multiplier(p, static_cast<std::size_t>(5 * p));
    } catch (const CongruenceError&) {
      ok = false;
    }
    record(name.str(), ok);
  }
  os << (all_ok ? "PASS" : "FAIL");
  json rec{{"object", "congruence"},
           {"params", {{"n", n}, {"pass", all_ok}}},
           {"coeffs", json::array()},
           {"verdicts", verdicts}};
  emit(os.str(), rec, format, out);
  return all_ok ? 0 : 1;
}

int cmd_basis(long k, const std::string& format, const std::string& out) {
  auto basis = depth1_basis(k);
  std::ostringstream os;
  json coeffs = json::array();
  bool first = true;
  for (auto [e, w] : basis) {
    std::ostringstream item;
    if (e > 0) {
      item << "E4";
      if (e > 1) item << "^" << e;
      if (w > 0) item << " ";
    }
    if (w > 0) item << "G" << w;
    if (e == 0 && w == 0) item << "1";
    if (!first) os << "\n";
    first = false;
    os << item.str();
    coeffs.push_back(item.str());
  }
  json rec{{"object", "basis"},
           {"params", {{"k", k}}},
           {"coeffs", coeffs},
           {"verdicts", json::array()}};
  emit(os.str(), rec, format, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with extremal quasimodular forms"};
  app.require_subcommand(1);
  std::string format = "text", out_path;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "output file (default stdout)");

  auto add_common = [&](CLI::App* sc) {
    sc->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sc->add_option("--out", out_path, "output file (default stdout)");
  };

  std::vector<std::string> expand_spec;
  std::size_t expand_n = 30;
  auto* sc_expand = app.add_subcommand("expand", "q-expansion of a form");
  sc_expand->add_option("spec", expand_spec, "form spec, e.g. G 26 1 or E2")
      ->expected(1, 3);
  sc_expand->add_option("--n", expand_n, "number of nonzero terms");
  add_common(sc_expand);

  long scan_wmax = 130;
  int scan_depth = 1;
  std::size_t scan_n = 60;
  auto* sc_scan = app.add_subcommand("scan", "integrality scan");
  sc_scan->add_option("--wmax", scan_wmax, "largest weight");
  sc_scan->add_option("--depth", scan_depth, "depth");
  sc_scan->add_option("--n", scan_n, "coefficients per weight");
  add_common(sc_scan);

  long prove_w = 0;
  std::size_t prove_n = 300;
  auto* sc_prove = app.add_subcommand("prove", "congruence verification");
  sc_prove->add_option("w", prove_w, "weight")->required();
  sc_prove->add_option("--n", prove_n, "series check depth");
  add_common(sc_prove);

  long atkin_m = 0;
  int atkin_a = 0;
  auto* sc_atkin = app.add_subcommand("atkin", "approximation polynomials");
  sc_atkin->add_option("m", atkin_m, "family index m")->required();
  sc_atkin->add_option("a", atkin_a, "family index a")->required();
  add_common(sc_atkin);

  std::size_t moments_n = 4;
  auto* sc_moments = app.add_subcommand("moments", "inner-product moments");
  sc_moments->add_option("--n", moments_n, "number of moments");
  add_common(sc_moments);

  std::string table_which;
  auto* sc_table = app.add_subcommand("table", "fixture tables");
  sc_table->add_option("which", table_which, "A or B")->required();
  add_common(sc_table);

  std::size_t cong_n = 100;
  auto* sc_cong =
      app.add_subcommand("congruence", "raw multiplier and product checks");
  sc_cong->add_option("--n", cong_n, "coefficients per check");
  add_common(sc_cong);

  long basis_k = 0;
  auto* sc_basis = app.add_subcommand("basis", "weight-graded basis");
  sc_basis->add_option("k", basis_k, "weight")->required();
  add_common(sc_basis);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (sc_expand->parsed())
      return cmd_expand(expand_spec, expand_n, format, out_path);
    if (sc_scan->parsed())
      return cmd_scan(scan_wmax, scan_depth, scan_n, format, out_path);
    if (sc_prove->parsed())
      return cmd_prove(prove_w, prove_n, format, out_path);
    if (sc_atkin->parsed())
      return cmd_atkin(atkin_m, atkin_a, format, out_path);
    if (sc_moments->parsed()) return cmd_moments(moments_n, format, out_path);
    if (sc_table->parsed()) return cmd_table(table_which, format, out_path);
    if (sc_cong->parsed()) return cmd_congruence(cong_n, format, out_path);
    if (sc_basis->parsed()) return cmd_basis(basis_k, format, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid argument\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

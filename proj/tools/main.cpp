// hypadic: p-adic boundedness of hypergeometric coefficients from the
// command line. Every verb is a thin adapter over the library; all numeric
// work happens there. Output goes to stdout and is byte-stable for identical
// inputs; diagnostics go to stderr. Exit codes: 0 success, 2 precondition
// violation (bad input, non-admissible parameters), 1 internal failure.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypadic/classify.hpp"
#include "hypadic/schwarz.hpp"

namespace {

using hypadic::Params2F1;
using hypadic::PreconditionError;
using hypadic::Rational;
using ordered_json = nlohmann::ordered_json;

// "a,b,c" with exact rational components; positions are named in diagnostics.
Params2F1 parse_triple(const std::string& text) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (;;) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw PreconditionError("parse_triple: \"" + text + "\" has " +
                            std::to_string(parts.size()) + " components, expected 3 (a,b,c)");
  }
  Rational vals[3];
  const char* names[3] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i) {
    try {
      vals[i] = Rational::parse(parts[i]);
    } catch (const PreconditionError& e) {
      throw PreconditionError("parse_triple: component " + std::to_string(i + 1) + " (" +
                              names[i] + "): " + e.what());
    }
  }
  return Params2F1{vals[0], vals[1], vals[2]};
}

void emit(const std::string& payload) { std::cout << payload << '\n'; }

ordered_json classification_json(const hypadic::PrimeClassification& cls) {
  ordered_json j;
  j["prime"] = cls.prime;
  j["verdict"] = to_string(cls.verdict);
  if (cls.verdict == hypadic::Verdict::Unbounded) j["witness_index"] = cls.witness_index;
  return j;
}

ordered_json triple_header(const Params2F1& t) {
  ordered_json j;
  j["a"] = t.a.str();
  j["b"] = t.b.str();
  j["c"] = t.c.str();
  return j;
}

int run_expand(const std::string& value, long prime, const std::string& format) {
  hypadic::PAdicExpansion e = hypadic::expand(Rational::parse(value), prime);
  if (format == "csv") {
    std::ostringstream os;
    os << "position,digit,part\n";
    for (size_t i = 0; i < e.preperiod.size(); ++i) {
      os << i << ',' << e.preperiod[i] << ",preperiod\n";
    }
    for (size_t i = 0; i < e.period.size(); ++i) {
      os << e.preperiod.size() + i << ',' << e.period[i] << ",period\n";
    }
    std::cout << os.str();
    return 0;
  }
  ordered_json j;
  j["value"] = e.value.str();
  j["prime"] = e.prime;
  j["preperiod"] = e.preperiod;
  j["period"] = e.period;
  j["display"] = e.str();
  emit(j.dump(2));
  return 0;
}

int run_profile(const std::string& triple, long prime, long max_m, const std::string& format) {
  Params2F1 t = parse_triple(triple);
  hypadic::ValuationProfile prof =
      hypadic::valuation_profile(hypadic::to_params(t), prime, max_m);
  if (format == "csv") {
    std::cout << prof.to_csv();
  } else {
    emit(prof.to_json());
  }
  return 0;
}

int run_classify(const std::string& triple, long prime, long max_prime,
                 const std::string& format) {
  Params2F1 t = parse_triple(triple);
  std::vector<hypadic::PrimeClassification> results;
  if (prime > 0) {
    results.push_back(hypadic::classify_prime(t, prime));
  } else {
    for (long p = 2; p <= max_prime; ++p) {
      if (hypadic::is_prime(p)) results.push_back(hypadic::classify_prime(t, p));
    }
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "prime,verdict,witness_index\n";
    for (const auto& cls : results) {
      os << cls.prime << ',' << to_string(cls.verdict) << ',';
      if (cls.verdict == hypadic::Verdict::Unbounded) os << cls.witness_index;
      os << '\n';
    }
    std::cout << os.str();
    return 0;
  }
  ordered_json j;
  j["params"] = triple_header(t);
  j["results"] = ordered_json::array();
  for (const auto& cls : results) j["results"].push_back(classification_json(cls));
  emit(j.dump(2));
  return 0;
}

int run_density(const std::string& triple, const std::string& method, long search_cap,
                const std::string& format) {
  Params2F1 t = parse_triple(triple);
  hypadic::DensityReport rep = (method == "group") ? hypadic::density_by_group(t)
                                                   : hypadic::density_by_sampling(t, search_cap);
  if (format == "csv") {
    std::cout << rep.to_csv();
  } else {
    emit(rep.to_json());
  }
  return 0;
}

int run_monodromy(const std::string& triple, const std::string& format) {
  Params2F1 t = parse_triple(triple);
  bool finite = hypadic::is_finite_monodromy(t);
  std::optional<Rational> bound = hypadic::is_full_density(t);
  if (format == "csv") {
    std::ostringstream os;
    os << "finite_monodromy,full_density,bound\n";
    os << (finite ? "true" : "false") << ',' << (bound ? "true" : "false") << ','
       << (bound ? bound->str() : "") << '\n';
    std::cout << os.str();
    return 0;
  }
  ordered_json j = triple_header(t);
  j["finite_monodromy"] = finite;
  j["full_density"] = bound.has_value();
  if (bound) {
    j["bound"] = bound->str();
  } else {
    j["bound"] = nullptr;
  }
  emit(j.dump(2));
  return 0;
}

int run_witness(const std::string& triple, long prime, long r_max, const std::string& format) {
  Params2F1 t = parse_triple(triple);
  std::vector<hypadic::Integer> ms = hypadic::unbounded_witnesses(t, prime, r_max);
  hypadic::CoeffValuation cv(hypadic::to_params(t), prime);
  if (format == "csv") {
    std::ostringstream os;
    os << "r,m,v\n";
    for (size_t r = 0; r < ms.size(); ++r) {
      os << r << ',' << ms[r].get_str() << ',' << cv.at(ms[r]) << '\n';
    }
    std::cout << os.str();
    return 0;
  }
  ordered_json j = triple_header(t);
  j["prime"] = prime;
  j["witnesses"] = ordered_json::array();
  for (size_t r = 0; r < ms.size(); ++r) {
    j["witnesses"].push_back(
        {{"r", r}, {"m", ms[r].get_str()}, {"v", cv.at(ms[r])}});
  }
  emit(j.dump(2));
  return 0;
}

int run_schwarz(long scan_limit, const std::string& format) {
  hypadic::TableReport table = hypadic::verify_table();
  if (!table.ok()) {
    for (const std::string& m : table.mismatches) std::cerr << m << '\n';
    throw hypadic::InternalError("schwarz-verify: embedded table failed verification");
  }
  const auto& pairs = hypadic::essential_pairs();
  std::vector<hypadic::Certificate> certs;
  certs.reserve(pairs.size());
  for (const auto& pair : pairs) certs.push_back(hypadic::certify_finite(pair, scan_limit));

  if (format == "csv") {
    std::ostringstream os;
    os << "a,b,series,norm_a,norm_b,norm_c,D,finite_monodromy,density,certified\n";
    for (const auto& c : certs) {
      for (const hypadic::TripleCertificate* tc : {&c.first, &c.second}) {
        os << c.a.str() << ',' << c.b.str() << ',' << (tc == &c.first ? 1 : 2) << ','
           << tc->normalized.a.str() << ',' << tc->normalized.b.str() << ','
           << tc->normalized.c.str() << ',' << tc->modulus << ','
           << (tc->finite_monodromy ? "true" : "false") << ',' << tc->density.str() << ','
           << (tc->certified ? "true" : "false") << '\n';
      }
    }
    std::cout << os.str();
    return 0;
  }
  ordered_json j;
  j["rows"] = table.rows;
  j["orbit_counts"] = ordered_json::object();
  for (const auto& [orbit, count] : table.orbit_counts) j["orbit_counts"][to_string(orbit)] = count;
  j["table_ok"] = table.ok();
  j["essential_pairs"] = static_cast<long>(pairs.size());
  bool all = true;
  j["pairs"] = ordered_json::array();
  for (const auto& c : certs) {
    j["pairs"].push_back(ordered_json::parse(c.to_json()));
    all = all && c.certified;
  }
  j["all_certified"] = all;
  emit(j.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-adic boundedness analysis of hypergeometric coefficients"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string value, triple, method = "sampling";
  long prime = 0, max_m = 100, max_prime = 0, r_max = 3;

  CLI::App* expand = app.add_subcommand("expand", "eventually periodic base-p digits of a rational");
  expand->add_option("value", value, "rational x with p-free denominator")->required();
  expand->add_option("--prime", prime, "prime p")->required();

  CLI::App* profile = app.add_subcommand("valuation-profile", "v_p(A_m) for m = 0..max-m");
  profile->add_option("triple", triple, "parameters a,b,c")->required();
  profile->add_option("--prime", prime, "prime p")->required();
  profile->add_option("--max-m", max_m, "largest index (default 100)");

  CLI::App* classify = app.add_subcommand("classify", "Unbounded / BoundedIntegral / NotGood per prime");
  classify->add_option("triple", triple, "parameters a,b,c")->required();
  CLI::Option* copt = classify->add_option("--prime", prime, "single prime to classify");
  classify->add_option("--max-prime", max_prime, "classify every prime up to this bound")
      ->excludes(copt);

  CLI::App* density = app.add_subcommand("density", "Dirichlet density of the unbounded primes");
  density->add_option("triple", triple, "parameters a,b,c")->required();
  density->add_option("--method", method, "sampling (classifies one prime per class) or group")
      ->check(CLI::IsMember({"sampling", "group"}));
  density->add_option("--max-prime", max_prime, "cap for the per-class prime search");

  CLI::App* monodromy = app.add_subcommand("monodromy", "interlacing (finite monodromy) and full-density tests");
  monodromy->add_option("triple", triple, "parameters a,b,c")->required();

  CLI::App* schwarz = app.add_subcommand("schwarz-verify", "check the embedded 54-row table and certify all essential pairs");
  schwarz->add_option("--max-prime", max_prime, "per-triple good-prime scan limit (default 1000)");

  CLI::App* witness = app.add_subcommand("witness", "indices m_r with v_p(A_{m_r}) <= -(r+1)");
  witness->add_option("triple", triple, "parameters a,b,c")->required();
  witness->add_option("--prime", prime, "prime p classified Unbounded")->required();
  witness->add_option("--r", r_max, "largest r (default 3)");

  for (CLI::App* sub : {expand, profile, classify, density, monodromy, schwarz, witness}) {
    sub->add_option("--format", format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (expand->parsed()) return run_expand(value, prime, format);
    if (profile->parsed()) return run_profile(triple, prime, max_m, format);
    if (classify->parsed()) {
      if (prime == 0 && max_prime == 0) {
        throw PreconditionError("classify: pass --prime or --max-prime");
      }
      return run_classify(triple, prime, max_prime, format);
    }
    if (density->parsed()) {
      return run_density(triple, method, max_prime > 0 ? max_prime : 1000000, format);
    }
    if (monodromy->parsed()) return run_monodromy(triple, format);
    if (schwarz->parsed()) return run_schwarz(max_prime > 0 ? max_prime : 1000, format);
    if (witness->parsed()) return run_witness(triple, prime, r_max, format);
    throw hypadic::InternalError("no subcommand dispatched");
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}

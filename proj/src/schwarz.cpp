#include "hypadic/schwarz.hpp"

#include <sstream>

#include "json.hpp"

namespace hypadic {

namespace {

using ordered_json = nlohmann::ordered_json;

struct RawRow {
  const char *m1, *m2;
  long level, weight;
  Orbit orbit;
  const char *a, *b;
};

// The 54 rows, in table order. Within each orbit the parameter pair is
// constant per block; the level column is carried verbatim from the source
// tables and is not consumed by any derivation here.
const RawRow kRows[] = {
    // Dihedral
    {"0", "1/2", 2, 2, Orbit::Dihedral, "-1/6", "1/3"},
    {"1/12", "7/12", 12, 3, Orbit::Dihedral, "-1/6", "1/3"},
    {"1/6", "2/3", 6, 4, Orbit::Dihedral, "-1/6", "1/3"},
    {"1/4", "3/4", 4, 5, Orbit::Dihedral, "-1/6", "1/3"},
    {"1/3", "5/6", 6, 6, Orbit::Dihedral, "-1/6", "1/3"},
    {"5/12", "11/12", 12, 7, Orbit::Dihedral, "-1/6", "1/3"},
    // Tetrahedral
    {"0", "2/3", 3, 3, Orbit::Tetrahedral, "-1/4", "5/12"},
    {"1/12", "3/4", 12, 4, Orbit::Tetrahedral, "-1/4", "5/12"},
    {"1/6", "5/6", 6, 5, Orbit::Tetrahedral, "-1/4", "5/12"},
    {"1/4", "11/12", 12, 6, Orbit::Tetrahedral, "-1/4", "5/12"},
    {"1/3", "0", 3, 1, Orbit::Tetrahedral, "1/4", "-1/12"},
    {"5/12", "1/12", 12, 2, Orbit::Tetrahedral, "1/4", "-1/12"},
    {"1/2", "1/6", 6, 3, Orbit::Tetrahedral, "1/4", "-1/12"},
    {"7/12", "1/4", 12, 4, Orbit::Tetrahedral, "1/4", "-1/12"},
    {"2/3", "1/3", 3, 5, Orbit::Tetrahedral, "1/4", "-1/12"},
    {"3/4", "5/12", 12, 6, Orbit::Tetrahedral, "1/4", "-1/12"},
    {"5/6", "1/2", 6, 7, Orbit::Tetrahedral, "1/4", "-1/12"},
    {"11/12", "7/12", 12, 8, Orbit::Tetrahedral, "1/4", "-1/12"},
    // Octahedral
    {"1/24", "19/24", 24, 4, Orbit::Octahedral, "-7/24", "11/24"},
    {"1/8", "7/8", 8, 5, Orbit::Octahedral, "-7/24", "11/24"},
    {"5/24", "23/24", 24, 6, Orbit::Octahedral, "-7/24", "11/24"},
    {"7/24", "1/24", 24, 1, Orbit::Octahedral, "5/24", "-1/24"},
    {"3/8", "1/8", 8, 2, Orbit::Octahedral, "5/24", "-1/24"},
    {"11/24", "5/24", 24, 3, Orbit::Octahedral, "5/24", "-1/24"},
    {"13/24", "7/24", 24, 4, Orbit::Octahedral, "5/24", "-1/24"},
    {"5/8", "3/8", 8, 5, Orbit::Octahedral, "5/24", "-1/24"},
    {"17/24", "11/24", 24, 6, Orbit::Octahedral, "5/24", "-1/24"},
    {"19/24", "13/24", 24, 7, Orbit::Octahedral, "5/24", "-1/24"},
    {"7/8", "5/8", 8, 8, Orbit::Octahedral, "5/24", "-1/24"},
    {"23/24", "17/24", 24, 9, Orbit::Octahedral, "5/24", "-1/24"},
    // Icosahedral, first kind
    {"1/30", "19/30", 30, 3, Orbit::Icosahedral1, "-13/60", "23/60"},
    {"7/60", "43/60", 60, 4, Orbit::Icosahedral1, "-13/60", "23/60"},
    {"1/5", "4/5", 5, 5, Orbit::Icosahedral1, "-13/60", "23/60"},
    {"17/60", "53/60", 24, 6, Orbit::Icosahedral1, "-13/60", "23/60"},
    {"11/30", "29/30", 30, 7, Orbit::Icosahedral1, "-13/60", "23/60"},
    {"9/20", "1/20", 20, 2, Orbit::Icosahedral1, "17/60", "-7/60"},
    {"8/15", "2/15", 15, 3, Orbit::Icosahedral1, "17/60", "-7/60"},
    {"37/60", "13/60", 60, 4, Orbit::Icosahedral1, "17/60", "-7/60"},
    {"7/10", "3/10", 10, 5, Orbit::Icosahedral1, "17/60", "-7/60"},
    {"47/60", "23/60", 60, 6, Orbit::Icosahedral1, "17/60", "-7/60"},
    {"13/15", "7/15", 15, 7, Orbit::Icosahedral1, "17/60", "-7/60"},
    {"19/20", "11/20", 20, 8, Orbit::Icosahedral1, "17/60", "-7/60"},
    // Icosahedral, second kind
    {"1/60", "49/60", 60, 4, Orbit::Icosahedral2, "-19/60", "29/60"},
    {"1/10", "9/10", 10, 5, Orbit::Icosahedral2, "-19/60", "29/60"},
    {"11/60", "59/60", 60, 6, Orbit::Icosahedral2, "-19/60", "29/60"},
    {"4/15", "1/15", 15, 1, Orbit::Icosahedral2, "11/60", "-1/60"},
    {"7/20", "3/20", 20, 2, Orbit::Icosahedral2, "11/60", "-1/60"},
    {"13/30", "7/30", 30, 3, Orbit::Icosahedral2, "11/60", "-1/60"},
    {"31/60", "19/60", 60, 4, Orbit::Icosahedral2, "11/60", "-1/60"},
    {"3/5", "2/5", 5, 5, Orbit::Icosahedral2, "11/60", "-1/60"},
    {"41/60", "29/60", 60, 6, Orbit::Icosahedral2, "11/60", "-1/60"},
    {"23/30", "17/30", 30, 7, Orbit::Icosahedral2, "11/60", "-1/60"},
    {"17/20", "13/20", 20, 8, Orbit::Icosahedral2, "11/60", "-1/60"},
    {"14/15", "11/15", 15, 9, Orbit::Icosahedral2, "11/60", "-1/60"},
};

ordered_json triple_json(const TripleCertificate& tc) {
  ordered_json j;
  j["params"] = {tc.raw.a.str(), tc.raw.b.str(), tc.raw.c.str()};
  if (!tc.normalized_ok) {
    j["failure"] = tc.failure;
    return j;
  }
  j["normalized"] = {tc.normalized.a.str(), tc.normalized.b.str(), tc.normalized.c.str()};
  j["D"] = tc.modulus;
  j["finite_monodromy"] = tc.finite_monodromy;
  j["density"] = tc.density.str();
  j["classes"] = ordered_json::array();
  for (const auto& e : tc.classes) {
    j["classes"].push_back({{"u", e.u}, {"verdict", to_string(e.verdict)}});
  }
  j["nongood_primes"] = tc.nongood_primes;
  j["unbounded_primes"] = tc.unbounded_primes;
  j["scan_limit"] = tc.scan_limit;
  j["certified"] = tc.certified;
  return j;
}

TripleCertificate certify_triple(const Params2F1& raw, long scan_limit) {
  TripleCertificate tc;
  tc.raw = raw;
  tc.scan_limit = scan_limit;
  try {
    tc.normalized = normalize_shift(raw.a, raw.b, raw.c);
    tc.normalized_ok = true;
  } catch (const PreconditionError& e) {
    tc.failure = e.what();
    return tc;
  }
  tc.modulus = lcm_denominator(tc.normalized);
  tc.finite_monodromy = is_finite_monodromy(tc.normalized);
  DensityReport rep = density_by_group(tc.normalized);
  tc.density = rep.density;
  tc.classes = rep.classes;
  for (long p = 2; p <= scan_limit; ++p) {
    if (!is_prime(p)) continue;
    PrimeClassification cls = classify_prime(tc.normalized, p);
    if (cls.verdict == Verdict::NotGood) {
      tc.nongood_primes.push_back(p);
    } else if (cls.verdict == Verdict::Unbounded) {
      tc.unbounded_primes.push_back(p);
    }
  }
  tc.certified = tc.finite_monodromy && tc.density.is_zero() && tc.unbounded_primes.empty();
  return tc;
}

}  // namespace

const char* to_string(Orbit o) {
  switch (o) {
    case Orbit::Dihedral: return "Dihedral";
    case Orbit::Tetrahedral: return "Tetrahedral";
    case Orbit::Octahedral: return "Octahedral";
    case Orbit::Icosahedral1: return "Icosahedral1";
    case Orbit::Icosahedral2: return "Icosahedral2";
  }
  throw InternalError("to_string: bad Orbit");
}

const std::vector<RepRecord>& schwarz_table() {
  static const std::vector<RepRecord> table = [] {
    std::vector<RepRecord> t;
    for (const RawRow& r : kRows) {
      t.push_back(RepRecord{Rational::parse(r.m1), Rational::parse(r.m2), r.level, r.weight,
                            r.orbit, Rational::parse(r.a), Rational::parse(r.b)});
    }
    return t;
  }();
  return table;
}

std::pair<Rational, Rational> derive_ab(const RepRecord& row) {
  Rational half_diff = (row.m1 - row.m2) / Rational(2);
  Rational twelfth(1, 12);
  return {twelfth + half_diff, twelfth - half_diff};
}

bool TableReport::ok() const { return mismatches.empty() && rows == 54; }

TableReport verify_table() {
  TableReport rep;
  const auto& table = schwarz_table();
  rep.rows = static_cast<long>(table.size());
  for (size_t i = 0; i < table.size(); ++i) {
    const RepRecord& row = table[i];
    ++rep.orbit_counts[row.orbit];
    auto [a, b] = derive_ab(row);
    if (a != row.a || b != row.b) {
      std::ostringstream os;
      os << to_string(row.orbit) << " row " << i << " (m1=" << row.m1 << ", m2=" << row.m2
         << "): derived (" << a << ", " << b << "), table has (" << row.a << ", " << row.b << ")";
      rep.mismatches.push_back(os.str());
    }
  }
  const std::map<Orbit, long> expected = {{Orbit::Dihedral, 6},
                                          {Orbit::Tetrahedral, 12},
                                          {Orbit::Octahedral, 12},
                                          {Orbit::Icosahedral1, 12},
                                          {Orbit::Icosahedral2, 12}};
  if (rep.orbit_counts != expected) rep.mismatches.push_back("orbit row counts are off");
  return rep;
}

EssentialPair essential_pair(const Rational& a, const Rational& b) {
  Rational third(1, 3), one(1);
  return EssentialPair{a, b, Params2F1{a, third + a, one + a - b}, Params2F1{b, third + b, one + b - a}};
}

const std::vector<EssentialPair>& essential_pairs() {
  static const std::vector<EssentialPair> pairs = [] {
    std::vector<EssentialPair> out;
    std::vector<std::pair<Rational, Rational>> seen;
    for (const RepRecord& row : schwarz_table()) {
      // Identify (a,b) with (b,a).
      std::pair<Rational, Rational> key =
          row.a < row.b ? std::make_pair(row.a, row.b) : std::make_pair(row.b, row.a);
      bool fresh = true;
      for (const auto& k : seen) {
        if (k == key) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        seen.push_back(key);
        out.push_back(essential_pair(row.a, row.b));
      }
    }
    return out;
  }();
  return pairs;
}

Certificate certify_finite(const EssentialPair& pair, long scan_limit) {
  if (scan_limit < 2) throw PreconditionError("certify_finite: scan limit below 2");
  Certificate cert;
  cert.a = pair.a;
  cert.b = pair.b;
  cert.first = certify_triple(pair.first, scan_limit);
  cert.second = certify_triple(pair.second, scan_limit);
  cert.certified = cert.first.certified && cert.second.certified;
  return cert;
}

std::string Certificate::to_json() const {
  ordered_json j;
  j["a"] = a.str();
  j["b"] = b.str();
  j["certified"] = certified;
  j["triples"] = ordered_json::array({triple_json(first), triple_json(second)});
  return j.dump(2);
}

}  // namespace hypadic

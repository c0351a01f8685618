#pragma once

// Reference data: Atkin-style approximation polynomials with their
// normalizing factors, the prime-power multiplier tables, the table of
// leading Fourier coefficients, and the closed-form coefficient formulas
// for the P/Q approximation remainders.

#include "eqmf/numeric.hpp"
#include "eqmf/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eqmf {

inline Rational rat(const char* s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

inline RationalPoly poly_desc(std::vector<const char*> high_to_low) {
  std::vector<Rational> c(high_to_low.size());
  for (std::size_t i = 0; i < high_to_low.size(); ++i)
    c[high_to_low.size() - 1 - i] = rat(high_to_low[i]);
  return RationalPoly(std::move(c));
}

struct AtkinFixture {
  long m;
  int a;  // weight class 12m + a
  RationalPoly A;
  RationalPoly B;
  Int clear;  // smallest C with C*A, C*B in Z[X]
  std::vector<std::pair<std::int64_t, int>> cn_factors;  // C * N_{m,a}
};

inline const std::vector<AtkinFixture>& atkin_fixtures() {
  static const std::vector<AtkinFixture> t = [] {
    std::vector<AtkinFixture> v;
    auto primes_to = [](std::int64_t lo, std::int64_t hi,
                        std::vector<std::pair<std::int64_t, int>> head) {
      for (std::int64_t p = lo; p <= hi; ++p)
        if (is_prime(p)) head.emplace_back(p, 1);
      return head;
    };
    v.push_back({1, 0, poly_desc({"1"}), poly_desc({"1", "-1008"}), 1,
                 {{2, 5}, {3, 3}, {5, 1}, {7, 1}, {11, 1}}});
    v.push_back({2, 0, poly_desc({"1", "-824"}),
                 poly_desc({"1", "-1832", "497952"}), 1,
                 primes_to(5, 23, {{2, 6}, {3, 3}})});
    v.push_back({0, 2, poly_desc({"1"}), RationalPoly(), 1, {}});
    v.push_back({1, 2, poly_desc({"1", "-720"}), poly_desc({"1"}), 1,
                 {{2, 5}, {3, 3}, {5, 1}, {7, 1}, {13, 1}}});
    v.push_back({3, 2,
                 poly_desc({"1", "-12576/5", "1526958", "-107765856"}),
                 poly_desc({"1", "-8976/5", "627534"}), 5,
                 primes_to(7, 37, {{2, 7}, {3, 4}, {5, 2}})});
    v.push_back({0, 6, poly_desc({"1"}), poly_desc({"1"}), 1,
                 {{2, 4}, {3, 2}, {5, 1}}});
    v.push_back({1, 6, poly_desc({"1", "-1266"}), poly_desc({"1", "-546"}), 1,
                 primes_to(5, 17, {{2, 6}, {3, 3}})});
    v.push_back({2, 6, poly_desc({"1", "-2115", "870630"}),
                 poly_desc({"1", "-1395", "259350"}), 1,
                 primes_to(7, 29, {{2, 6}, {3, 4}, {5, 2}})});
    v.push_back({4, 6,
                 poly_desc({"1", "-7671/2", "4871313", "-2260803660",
                            "273189722310"}),
                 poly_desc({"1", "-6231/2", "3021273", "-948582060",
                            "53723885670"}),
                 2, primes_to(11, 53, {{2, 7}, {3, 4}, {5, 2}, {7, 2}})});
    v.push_back({9, 6,
                 poly_desc({"1", "-24454/3", "474979296/17",
                            "-888804457205/17", "58002865348421",
                            "-38759471954111394", "15135088185868167792",
                            "-3173598010686486090312",
                            "297473555337690122052390",
                            "-7840346480159903987708940"}),
                 poly_desc({"1", "-22294/3", "390702816/17",
                            "-651013930805/17", "37180279576181",
                            "-21228003877921074", "6835398004395374832",
                            "-1114698418843177975752",
                            "72322444486635699257190",
                            "-919318930586739576036780"}),
                 51, primes_to(11, 113, {{2, 8}, {3, 5}, {5, 2}, {7, 2}})});
    v.push_back({0, 8, poly_desc({"1"}), poly_desc({"1"}), 1,
                 {{2, 4}, {3, 2}, {7, 1}}});
    v.push_back({1, 8, poly_desc({"1", "-330"}), poly_desc({"1", "-1338"}), 1,
                 {{2, 6}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {19, 1}}});
    v.push_back({2, 8, poly_desc({"1", "-1215", "129030"}),
                 poly_desc({"1", "-2223", "1021110"}), 1,
                 {{2, 6}, {3, 4}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1},
                  {19, 1}, {23, 1}, {31, 1}}});
    v.push_back({5, 8,
                 poly_desc({"1", "-19098/5", "25015408/5", "-12959037322/5",
                            "441761976414", "-9018997829292"}),
                 poly_desc({"1", "-24138/5", "42602992/5", "-33192286666/5",
                            "10734540754806/5", "-202399435400844"}),
                 5, primes_to(11, 67, {{2, 8}, {3, 4}, {5, 2}, {7, 2}})});
    v.push_back({6, 8,
                 poly_desc({"1", "-4685", "89349390/11", "-6372443376",
                            "2195718854056", "-261120476348550",
                            "3783879543834780"}),
                 poly_desc({"1", "-5693", "137637630/11", "-146033508816/11",
                            "6911247661864", "-1568906774156358",
                            "105994437115386300"}),
                 11, primes_to(11, 79, {{2, 8}, {3, 4}, {5, 2}, {7, 2}})});
    return v;
  }();
  return t;
}

inline const AtkinFixture* atkin_fixture(long m, int a) {
  for (const auto& f : atkin_fixtures())
    if (f.m == m && f.a == a) return &f;
  return nullptr;
}

// --- prime-power multiplier data: target(t) = (num/den)(t) * U(t^p) holds
// mod p^s, where target is U or V.

struct MultiplierTableEntry {
  std::int64_t p;
  int s;
  bool for_v;  // false: U, true: V
  std::vector<std::int64_t> num;
  std::vector<std::int64_t> den;  // {1} when polynomial
};

inline const std::vector<MultiplierTableEntry>& multiplier_tables() {
  static const std::vector<MultiplierTableEntry> t = {
      {5, 2, false, {1, 20, 10}, {1}},
      {5, 2, true, {1, 15, 5}, {1}},
      {7, 2, false, {1, 22, 7, 21, 0, 0, 0, 1, 36}, {1, 0, 0, 0, 0, 0, 0, 1}},
      {7, 2, true, {1, 7, 42, 7, 0, 0, 0, 43}, {1, 0, 0, 0, 0, 0, 0, 1}},
      {2, 8, false, {1, 120, 96, 128}, {1}},
      {2, 8, true, {1, 72, 128, 128, 64, 0, 0, 0, 128}, {1}},
      {3, 5, false, {1, 120, 54, 189, 135, 81, 162, 81, 0, 0, 162}, {1}},
      {3, 5, true, {1, 111, 216, 162, 135, 81, 0, 81, 0, 162, 162}, {1}},
  };
  return t;
}

inline const MultiplierTableEntry& multiplier_table(std::int64_t p, int s,
                                                    bool for_v) {
  for (const auto& e : multiplier_tables())
    if (e.p == p && e.s == s && e.for_v == for_v) return e;
  throw NumericError("no multiplier table for " + std::to_string(p) + "^" +
                     std::to_string(s));
}

// --- leading Fourier coefficients a_w(1..5) of the depth-1 extremal forms
// with integral expansions.

struct FourierRow {
  long w;
  std::int64_t a[5];
};

inline const std::vector<FourierRow>& fourier_table() {
  static const std::vector<FourierRow> t = {
      {2, {-24, -72, -96, -168, -144}},
      {6, {18, 84, 292, 630, 1512}},
      {8, {66, 732, 4228, 15630, 48312}},
      {10, {258, 6564, 66052, 390630, 1693512}},
      {12, {56, 1002, 9296, 57708, 269040}},
      {14, {128, 4050, 58880, 525300, 3338496}},
      {16, {296, 16602, 377456, 4846908, 41943120}},
      {18, {99, 3510, 64944, 764874, 6478758}},
      {20, {183, 10134, 269832, 4326546, 47862918}},
      {22, {339, 29430, 1127904, 24615834, 355679478}},
      {24, {144, 7944, 235840, 4451130, 59405952}},
      {28, {384, 44664, 2460160, 79196970, 1693028352}},
      {30, {190, 14460, 608570, 16463120, 314562708}},
      {32, {286, 29988, 1652834, 56608952, 1335336084}},
      {34, {430, 62220, 4496090, 195047840, 5680752948}},
      {38, {336, 43587, 3065648, 136437750, 4219436160}},
      {54, {378, 62532, 6109740, 401161950, 19083824856}},
      {58, {618, 155412, 21940620, 2005126350, 128986599096}},
      {68, {581, 147042, 21956168, 2203554570, 160242315903}},
      {80, {678, 204756, 37135249, 4592036697, 416237464122}},
      {114, {855, 341886, 85507600, 15092041050, 2010698806050}},
      {118, {1095, 549246, 169413760, 36358101930, 5819797557810}},
  };
  return t;
}

inline std::vector<long> integral_depth1_weights() {
  std::vector<long> w;
  for (const auto& row : fourier_table()) w.push_back(row.w);
  return w;
}

// --- closed-form coefficient formulas for the approximation remainders:
// coefficient(r) = poly(r) * (6r+sa)! / (den * (3r+sb)! * r! * (r+sc)!^2).
// "halved" marks the series printed with the (1-1728t)^{-1/2} factor
// absorbed.

struct ClosedFormEntry {
  char family;  // 'P' or 'Q'
  long n;
  bool halved;
  std::vector<Int> poly;  // low-to-high in r
  long sa, sb, sc;
  Int den;
};

inline const std::vector<ClosedFormEntry>& closed_form_table() {
  static const std::vector<ClosedFormEntry> t = [] {
    std::vector<ClosedFormEntry> v;
    auto I = [](const char* s) { return Int(s); };
    v.push_back({'P', 0, false, {1}, 0, 0, 0, 1});
    v.push_back({'P', 2, false, {77, 41}, 6, 3, 2, 2310});
    v.push_back({'P', 4, false, {193154, 117219, 17377}, 12, 6, 4,
                 223092870});
    v.push_back({'P', 1, true, {1}, 6, 3, 1, 120});
    v.push_back({'P', 3, true, {221, 77}, 12, 6, 3, 4084080});
    v.push_back({'P', 5, true, {633650, 294051, 33649}, 18, 9, 5,
                 Int("776363187600")});
    v.push_back({'P', 9, true,
                 {I("846250112568"), I("470641033450"), I("97346883895"),
                  I("8876894690"), I("301163357")},
                 30, 15, 9, I("1303566339087601789200")});
    v.push_back({'P', 19, true,
                 {I("3578581860690243122001381266421120"),
                  I("2236089229125717720580535903583888"),
                  I("618440343527755839046417085216700"),
                  I("99369498641304011775924341700640"),
                  I("10222801871323855615909703388405"),
                  I("698329420677409164956468289249"),
                  I("31676880792353832401375777850"),
                  I("920111315629981006299003510"),
                  I("15530138946748752922984725"),
                  I("116055861444395385601913")},
                 60, 30, 19,
                 I("7586413113700225869154849509970478998385924877600")});
    v.push_back({'Q', 0, true, {1}, 1, 0, 0, 1});
    v.push_back({'Q', 2, true, {13, 7}, 7, 3, 2, 2730});
    v.push_back({'Q', 6, true,
                 {I("114757350"), I("72947639"), I("15220608"), I("1043119")},
                 19, 9, 6, I("74207381348100")});
    v.push_back({'Q', 1, false, {7, 8}, 1, 0, 1, 7});
    v.push_back({'Q', 3, false, {8151, 7231, 1528}, 7, 3, 3, 190190});
    v.push_back({'Q', 5, false,
                 {I("57574750"), I("46901365"), I("12418991"), I("1070744")},
                 13, 6, 5, I("34579394850")});
    v.push_back({'Q', 11, false,
                 {I("3982438425105968520"), I("2986992686186751022"),
                  I("924734694751472239"), I("151287554887490515"),
                  I("13797873461407945"), I("665298552506263"),
                  I("13252649705176")},
                 31, 15, 11, I("15716643102160534111758180")});
    v.push_back({'Q', 13, false,
                 {I("580367220881648001413040"),
                  I("430315970858396108150652"),
                  I("135688184492311416306712"),
                  I("23590276457107577780801"),
                  I("2442571823969345600665"),
                  I("150642927750066254963"),
                  I("5124808625350611463"),
                  I("74198322973160504")},
                 37, 18, 13, I("32176447673406729078990845541300")});
    return v;
  }();
  return t;
}

inline Rational closed_form_coeff(const ClosedFormEntry& e, long r) {
  Int p = 0;
  for (std::size_t i = e.poly.size(); i-- > 0;)
    p = p * r + e.poly[i];
  Rational num = Rational(p * factorial(6 * r + e.sa));
  Rational den = Rational(e.den * factorial(3 * r + e.sb) * factorial(r) *
                          factorial(r + e.sc) * factorial(r + e.sc));
  return num / den;
}

// --- quadratic factors of the closed-form representation of the top term
// of extremal forms of weight 12n+2r at depth r, n=2; the depth-1 entry
// reduces mod 11, 17, 19 to split polynomials that the higher-depth
// entries reproduce.

struct DepthTopFixture {
  int depth;
  RationalPoly A;
};

inline const std::vector<DepthTopFixture>& depth_top_fixtures() {
  static const std::vector<DepthTopFixture> t = {
      {1, poly_desc({"1", "-1640", "269280"})},
      {2, poly_desc({"1", "5367564/4847", "97748640/4847"})},
      {3, poly_desc({"1", "-100925285400/6736603",
                     "184720492440000/6736603"})},
      {4, poly_desc({"1", "13326301537125/303744733",
                     "8760324756150000/303744733"})},
      {5, poly_desc({"1", "-567274769925055704588000/7988288882724700441",
                     "302601299124728270224800000/7988288882724700441"})},
      {6, poly_desc(
              {"1",
               "67508245504783855161034500000/433955868750758754759533",
               "-163976620145430859347886034400000/"
               "433955868750758754759533"})},
  };
  return t;
}

}  // namespace eqmf

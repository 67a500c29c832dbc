#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "modw/suites.hpp"

using namespace modw;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit;
  std::function<Outcome()> run;
};

Outcome all_of(const std::vector<std::pair<std::string, std::function<Outcome()>>>& checks) {
  for (const auto& [tag, f] : checks) {
    auto o = f();
    if (!o.ok) return {false, tag + ": " + o.details};
  }
  return {true, std::to_string(checks.size()) + " cases"};
}

Outcome report_ok(const Report& rep) {
  for (const auto& r : rep.records())
    if (r.status == "fail") return {false, r.suite + "/" + r.id + ": " + r.details};
  return {true, std::to_string(rep.records().size()) + " checks"};
}

std::vector<Pyramid> pyramids_up_to(int maxN) {
  std::vector<Pyramid> out;
  for (int N = 1; N <= maxN; ++N)
    for (auto& P : all_pyramids(N)) out.push_back(P);
  return out;
}

std::vector<std::vector<int>> partitions_up_to(int maxN) {
  std::vector<std::vector<int>> out;
  std::function<void(int, int, std::vector<int>&)> rec = [&](int left, int lo, std::vector<int>& cur) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = lo; x <= left; ++x) {
      cur.push_back(x);
      rec(left - x, x, cur);
      cur.pop_back();
    }
  };
  for (int N = 1; N <= maxN; ++N) {
    std::vector<int> cur;
    rec(N, 1, cur);
  }
  return out;
}

const std::vector<std::vector<int>> kHcCases{{1, 1}, {2, 2}, {1, 2, 2}};
const std::vector<unsigned> kHcPrimes{2, 3};

}  // namespace

int main() {
  std::vector<Criterion> crit;

  crit.push_back({1, "combinatorics: worked example and 200 roundtrips", 1, [] {
                    SuiteConfig cfg;
                    Report rep;
                    suite_combinatorics(cfg, rep);
                    return report_ok(rep);
                  }});

  crit.push_back({2, "centralizer bracket and p-power vs matrices, all pyramids N<=8, p in {2,3,5}", 10, [] {
                    std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
                    for (const auto& P : pyramids_up_to(8))
                      checks.emplace_back(pyr_id(P), [P] { return centralizer_oracle(P, {2, 3, 5}, false); });
                    return all_of(checks);
                  }});

  crit.push_back({3, "theta preserves bracket and p-map, 10 random (sigma,l), N<=8", 10, [] {
                    Rng rng(2024);
                    std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
                    for (int k = 0; k < 10; ++k) {
                      auto P = detail::random_pyramid(rng, 4, 6, 8);
                      auto [s, l] = shift_from_pyramid(P);
                      unsigned p = k % 2 ? 3 : 2;
                      checks.emplace_back(pyr_id(P), [s = s, l = l, p] { return theta_oracle(s, l, p); });
                    }
                    return all_of(checks);
                  }});

  crit.push_back({4, "Capelli coefficients central in U(gl_N), N<=4, p in {2,3,5}", 30, [] {
                    std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
                    for (int N = 1; N <= 4; ++N)
                      for (unsigned p : {2u, 3u, 5u})
                        checks.emplace_back("N=" + std::to_string(N) + " p=" + std::to_string(p),
                                            [N, p] { return capelli_centrality(N, p); });
                    return all_of(checks);
                  }});

  crit.push_back({5, "z_s central in U(g^e), left-justified N<=5, p in {2,3,5}", 60, [] {
                    std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
                    for (const auto& part : partitions_up_to(5))
                      for (unsigned p : {2u, 3u, 5u})
                        checks.emplace_back("p=(" + join(part) + ") prime " + std::to_string(p),
                                            [part, p] { return z_commutation(part, p); });
                    return all_of(checks);
                  }});

  crit.push_back({6, "D generators: vanishing, invariance, loop symbol, integral form; N<=5, p in {2,3}", 120, [] {
                    std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
                    for (const auto& P : pyramids_up_to(5))
                      for (unsigned p : {2u, 3u})
                        checks.emplace_back(pyr_id(P) + " p=" + std::to_string(p), [P, p] {
                          WContext<PrimeField> ctx(P, p, PrimeField(p));
                          for (auto f : {d_vanishing<PrimeField>, d_twisted, d_loop_top, d_integral}) {
                            auto o = f(ctx);
                            if (!o.ok) return o;
                          }
                          return Outcome{true, ""};
                        });
                    return all_of(checks);
                  }});

  crit.push_back({7, "Harish-Chandra match on q=(1,1),(2,2),(1,2,2), p in {2,3}", 120, [] {
                    std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
                    for (const auto& q : kHcCases)
                      for (unsigned p : kHcPrimes)
                        checks.emplace_back("q=" + join(q) + " p=" + std::to_string(p), [q, p] {
                          WContext<PrimeField> ctx(Pyramid::from_q(q), p, PrimeField(p));
                          std::string det;
                          return Outcome{hc_match(ctx, &det), det};
                        });
                    return all_of(checks);
                  }});

  crit.push_back({8, "Z(u) polynomial of degree N and Z_r commute with the D's", 120, [] {
                    std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
                    for (const auto& q : kHcCases)
                      for (unsigned p : kHcPrimes)
                        checks.emplace_back("q=" + join(q) + " p=" + std::to_string(p), [q, p] {
                          WContext<PrimeField> ctx(Pyramid::from_q(q), p, PrimeField(p));
                          auto o = z_polynomial(ctx, 3);
                          return o.ok ? z_central_D(ctx) : o;
                        });
                    return all_of(checks);
                  }});

  crit.push_back({9, "D_i^(r) on m_A for 50 tableaux per case, factorization in u", 60, [] {
                    std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
                    for (const auto& q : kHcCases)
                      for (unsigned p : kHcPrimes)
                        checks.emplace_back("q=" + join(q) + " p=" + std::to_string(p), [q, p] {
                          WContext<PrimeField> ctx(Pyramid::from_q(q), p, PrimeField(p));
                          HChainCache chains(ctx.par());
                          PolyF S(PrimeField(p), "x");
                          Rng rng(7);
                          for (int k = 0; k < 50; ++k) {
                            auto o = verma_sample(ctx, chains, random_tableau(ctx.pyr(), S, rng));
                            if (!o.ok) return o;
                          }
                          return Outcome{true, ""};
                        });
                    return all_of(checks);
                  }});

  crit.push_back({10, "hat B, p-centre generator and e_r(a^p-a) agree on m_A, 50 tableaux per case", 300, [] {
                     int shortcut = 0, two_seq = 0;
                     std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
                     for (const auto& q : kHcCases)
                       for (unsigned p : kHcPrimes)
                         checks.emplace_back("q=" + join(q) + " p=" + std::to_string(p), [&, q, p] {
                           WContext<PrimeField> ctx(Pyramid::from_q(q), p, PrimeField(p));
                           HChainCache chains(ctx.par());
                           PolyF S(PrimeField(p), "x");
                           Rng rng(11);
                           for (int k = 0; k < 50; ++k) {
                             HighestWeight<PolyF> hw(ctx, S, random_tableau(ctx.pyr(), S, rng), &chains);
                             for (int i = 1; i <= ctx.n(); ++i)
                               for (int r = 1; r <= ctx.pyr().p(i); ++r) {
                                 auto pr = hw.main_theorem_probe(i, r);
                                 if (!pr.ok) return Outcome{false, pr.detail};
                                 if (static_cast<int>(p) > r) ++shortcut;
                                 if (p == 2 && r == 2 && d_sequences(ctx.pyr().p(i), r, p).seqs.size() == 2) ++two_seq;
                               }
                           }
                           return d_sequence_facts(ctx.pyr(), p);
                         });
                     auto o = all_of(checks);
                     if (!o.ok) return o;
                     if (!shortcut || !two_seq) return Outcome{false, "shortcut or two-sequence case not exercised"};
                     return Outcome{true, "p>r probes " + std::to_string(shortcut) + ", p=2 r=2 two-sequence probes " +
                                              std::to_string(two_seq)};
                   }});

  crit.push_back({11, "restricted quotient: dimension p^dim p for dim p<=6, kernels, p in {2,3}", 60, [] {
                     std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
                     for (unsigned p : {2u, 3u}) {
                       for (const auto& P : pyramids_up_to(3))
                         if (build_parabolic(P, p).dim_p <= 6)
                           checks.emplace_back(pyr_id(P) + " p=" + std::to_string(p), [P, p] {
                             auto o = restricted_dimension(P, p);
                             if (!o.ok) return o;
                             WContext<PrimeField> ctx(P, p, PrimeField(p));
                             return restricted_kills(ctx);
                           });
                       for (const auto& q : kHcCases)
                         checks.emplace_back("kernel q=" + join(q) + " p=" + std::to_string(p), [q, p] {
                           WContext<PrimeField> ctx(Pyramid::from_q(q), p, PrimeField(p));
                           return restricted_kills(ctx);
                         });
                     }
                     return all_of(checks);
                   }});

  crit.push_back({12, "arithmetic identities, p<=13", 1, [] {
                     SuiteConfig cfg;
                     Report rep;
                     suite_arith(cfg, rep);
                     return report_ok(rep);
                   }});

  int failed = 0;
  for (const auto& c : crit) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.limit;
    bool ok = o.ok && in_time;
    failed += !ok;
    std::string why = o.details;
    if (o.ok && !in_time) why = "over the time limit";
    std::printf("%s C%-2d %s [%.2f s / limit %.0f s] %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, c.limit,
                why.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(crit.size()) - failed, crit.size());
  return failed ? 1 : 0;
}

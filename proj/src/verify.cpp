#include "qcrystal/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qcrystal/characters.hpp"
#include "qcrystal/crystal_core.hpp"
#include "qcrystal/crystal_graph.hpp"
#include "qcrystal/shifted_tableaux.hpp"
#include "qcrystal/tensor_rule.hpp"
#include "qcrystal/weyl.hpp"

namespace qcrystal {

namespace {

class Recorder {
 public:
  Recorder(VerificationReport& report, const FailureSink& sink) : report_(report), sink_(sink) {}

  void check(bool ok, const std::string& input, const std::string& expected,
             const std::string& actual) {
    ++report_.checked;
    if (ok) return;
    fail(input, expected, actual);
  }

  void fail(const std::string& input, const std::string& expected, const std::string& actual) {
    ++report_.failure_count;
    Failure f{input, expected, actual};
    if (sink_) sink_(report_.suite, f);
    if (report_.failures.size() < VerificationReport::kMaxStoredFailures) {
      report_.failures.push_back(std::move(f));
    }
  }

 private:
  VerificationReport& report_;
  const FailureSink& sink_;
};

std::string show(const std::optional<Word>& w) { return w ? w->to_string() : "0"; }

std::string ctx(int n, const Word& w) { return "n=" + std::to_string(n) + " w=" + w.to_string(); }

template <class Fn>
void for_each_word(Alphabet a, int length, Fn&& fn) {
  std::vector<Letter> cur(length, 1);
  while (true) {
    fn(Word(cur));
    int p = length - 1;
    while (p >= 0 && cur[p] == a.rank()) cur[p--] = 1;
    if (p < 0) return;
    ++cur[p];
  }
}

template <class Fn>
void for_each_word_upto(Alphabet a, int max_length, Fn&& fn) {
  for (int len = 0; len <= max_length; ++len) for_each_word(a, len, fn);
}

// f_low ... f_high applied to w (f_high first); empty when high < low.
std::optional<Word> lower_run(const Word& w, int low, int high, Alphabet a) {
  std::optional<Word> cur = w;
  for (int i = high; i >= low && cur; --i) cur = f_even(*cur, i, a);
  return cur;
}

std::optional<Word> prefix(Letter x, const std::optional<Word>& w) {
  if (!w) return std::nullopt;
  return Word(std::vector<Letter>{x}) + *w;
}

// ---------------------------------------------------------------- suites

void suite_nilpotency(const VerifyBounds& b, Recorder& rec) {
  for (int n = 2; n <= b.n_max; ++n) {
    const Alphabet a(n);
    for_each_word_upto(a, b.power_max, [&](const Word& w) {
      for (int i = 1; i < n; ++i) {
        auto e = e_odd(w, i, a);
        auto e2 = e ? e_odd(*e, i, a) : std::nullopt;
        rec.check(!e2, ctx(n, w) + " e_" + std::to_string(i) + "bar^2", "0", show(e2));
        auto f = f_odd(w, i, a);
        auto f2 = f ? f_odd(*f, i, a) : std::nullopt;
        rec.check(!f2, ctx(n, w) + " f_" + std::to_string(i) + "bar^2", "0", show(f2));
      }
    });
  }
}

void suite_assoc(const VerifyBounds& b, Recorder& rec) {
  std::mt19937_64 rng(b.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < b.assoc_trials; ++trial) {
    const int n = uniform(2, b.n_max);
    const Alphabet a(n);
    const int total = uniform(0, b.assoc_length_max);
    const int cut1 = uniform(0, total);
    const int cut2 = uniform(cut1, total);
    std::vector<Letter> letters(total);
    for (auto& x : letters) x = static_cast<Letter>(uniform(1, n));
    const Word w(letters);
    const auto s1 = static_cast<std::size_t>(cut1);
    const auto s2 = static_cast<std::size_t>(cut2 - cut1);
    const auto s3 = static_cast<std::size_t>(total - cut2);

    const std::vector<Bracketing> routes{
        Bracketing::join(Bracketing::join(Bracketing::segment(s1), Bracketing::segment(s2)),
                         Bracketing::segment(s3)),
        Bracketing::join(Bracketing::segment(s1),
                         Bracketing::join(Bracketing::segment(s2), Bracketing::segment(s3))),
        Bracketing::letters_left(w.size()),
        Bracketing::letters_right(w.size()),
    };
    const std::string input = ctx(n, w) + " split=" + std::to_string(cut1) + "|" +
                              std::to_string(cut2);
    for (int s = 0; s < OperatorLabel::slot_count(a); ++s) {
      const OperatorLabel label = OperatorLabel::from_slot(s, a);
      for (Direction d : {Direction::raise, Direction::lower}) {
        const auto direct = apply(w, label, d, a);
        for (std::size_t r = 0; r < routes.size(); ++r) {
          const auto via = apply_bracketed(w, routes[r], label, d, a);
          rec.check(via == direct,
                    input + " label=" + label.token() + (d == Direction::raise ? " raise" : " lower") +
                        " route=" + std::to_string(r),
                    show(direct), show(via));
        }
      }
      if (!label.is_odd()) {
        const int i = label.index();
        for (std::size_t r = 0; r < routes.size(); ++r) {
          rec.check(eps_bracketed(w, routes[r], i, a) == eps(w, i, a) &&
                        phi_bracketed(w, routes[r], i, a) == phi(w, i, a),
                    input + " eps/phi_" + std::to_string(i) + " route=" + std::to_string(r),
                    std::to_string(eps(w, i, a)) + "/" + std::to_string(phi(w, i, a)),
                    std::to_string(eps_bracketed(w, routes[r], i, a)) + "/" +
                        std::to_string(phi_bracketed(w, routes[r], i, a)));
        }
      }
    }
  }
}

void suite_charhw(const VerifyBounds& b, Recorder& rec) {
  for (int n = 2; n <= b.n_max; ++n) {
    const Alphabet a(n);
    std::set<Word> previous_brute{Word{}};
    std::set<Word> recursive{Word{}};
    for (int len = 1; len <= b.power_max; ++len) {
      std::set<Word> brute;
      std::vector<Word> gl_previous;
      for_each_word(a, len, [&](const Word& w) {
        if (is_highest_weight(w, a)) brute.insert(w);
      });
      for_each_word(a, len - 1, [&](const Word& w) {
        if (is_gl_highest(w, n, a)) gl_previous.push_back(w);
      });

      std::set<Word> from_brute;
      for (const Word& hw : previous_brute) {
        for (Word& c : hw_recursion_candidates(hw, a)) from_brute.insert(std::move(c));
      }
      std::set<Word> next_recursive;
      for (const Word& hw : recursive) {
        for (Word& c : hw_recursion_candidates(hw, a)) next_recursive.insert(std::move(c));
      }

      auto describe = [](const std::set<Word>& s) { return std::to_string(s.size()) + " words"; };
      const std::string where = "n=" + std::to_string(n) + " N=" + std::to_string(len);
      rec.check(brute == from_brute, where + " hw(N) vs candidates(hw(N-1))", describe(brute),
                describe(from_brute));
      rec.check(brute == next_recursive, where + " hw(N) vs pure recursion from (1)",
                describe(brute), describe(next_recursive));
      for (const Word& w : brute) {
        const Weight wt = weight(w, a);
        rec.check(wt.is_strict_partition(), ctx(n, w) + " hw weight", "strict", wt.to_string());
      }

      // b0 = 1 (x) f_1...f_{j-1} b is highest iff b is highest and wt(b0) strict.
      for (const Word& gl : gl_previous) {
        const Weight wt = weight(gl, a);
        for (int j = 1; j <= n; ++j) {
          const Weight target = wt + Weight::unit(n, j);
          if (!target.is_partition()) continue;
          auto b0 = prefix(1, lower_chain(gl, j, a));
          if (!b0) {
            rec.fail(ctx(n, gl) + " j=" + std::to_string(j), "f-chain defined", "0");
            continue;
          }
          const bool lhs = is_highest_weight(*b0, a);
          const bool rhs = is_highest_weight(gl, a) && target.is_strict_partition();
          rec.check(lhs == rhs, ctx(n, gl) + " j=" + std::to_string(j) + " iff-characterization",
                    rhs ? "highest" : "not highest", lhs ? "highest" : "not highest");
        }
      }
      previous_brute = std::move(brute);
      recursive = std::move(next_recursive);
    }
  }
}

void suite_strict(const VerifyBounds& b, Recorder& rec) {
  for (int n = 2; n <= b.n_max; ++n) {
    const Alphabet a(n);
    for_each_word_upto(a, b.power_max, [&](const Word& w) {
      const Weight wt = weight(w, a);
      if (is_highest_weight(w, a)) {
        rec.check(wt.is_strict_partition(), ctx(n, w) + " hw weight strict", "strict",
                  wt.to_string());
      }
      // eps_1 = 0 and <k_1,wt> = <k_2,wt> > 0 force e_1bar != 0
      if (eps(w, 1, a) == 0 && wt.k(1) == wt.k(2) && wt.k(1) > 0) {
        rec.check(e_odd1(w).has_value(), ctx(n, w) + " non-vanishing e_1bar", "nonzero", "0");
      }
    });
  }
}

void suite_e1f1(const VerifyBounds& b, Recorder& rec) {
  for (int n = 2; n <= b.n_max; ++n) {
    const Alphabet a(n);
    for_each_word_upto(a, b.power_max, [&](const Word& w) {
      auto f = f_even(w, 1, a);
      if (f && !e_odd1(*f)) {
        rec.check(!e_odd1(w), ctx(n, w) + " e_1bar f_1 w = 0 => e_1bar w = 0", "0",
                  show(e_odd1(w)));
      }
    });
  }
}

void suite_lifts(const VerifyBounds& b, Recorder& rec) {
  for (int n = 2; n <= b.n_max; ++n) {
    const Alphabet a(n);
    for_each_word_upto(a, b.power_max - 1, [&](const Word& w) {
      const Weight wt = weight(w, a);
      const bool e1bar_zero = !e_odd1(w);
      // (a)
      if (e1bar_zero && eps(w, 1, a) == 0 && wt.k(1) >= wt.k(2) + 2) {
        auto target = prefix(1, f_even(w, 1, a));
        rec.check(target && !e_odd1(*target), ctx(n, w) + " e_1bar(1 (x) f_1 w) = 0", "0",
                  target ? show(e_odd1(*target)) : "f_1 w = 0");
      }
      // (b)
      if (n >= 3 && e1bar_zero && eps(w, 1, a) == 0 && eps(w, 2, a) == 0 && wt.k(2) > wt.k(3)) {
        auto target = prefix(1, lower_run(w, 1, 2, a));
        rec.check(target && !e_odd1(*target), ctx(n, w) + " e_1bar(1 (x) f_1 f_2 w) = 0", "0",
                  target ? show(e_odd1(*target)) : "f_1 f_2 w = 0");
      }
      // converse: k_{j-1} >= k_j + 2 makes 1 (x) f_1...f_{j-1} b highest
      if (is_highest_weight(w, a)) {
        for (int j = 2; j <= n; ++j) {
          if (wt.k(j - 1) < wt.k(j) + 2) continue;
          auto b0 = prefix(1, lower_chain(w, j, a));
          rec.check(b0 && is_highest_weight(*b0, a),
                    ctx(n, w) + " j=" + std::to_string(j) + " converse", "highest",
                    b0 ? b0->to_string() + " not highest" : "0");
        }
      }
      // q(3): b gl(3)-highest, 1 (x) f_1 f_2 b q(3)-highest => e_1bar b = 0
      if (n >= 3 && is_gl_highest(w, 3, a)) {
        auto b0 = prefix(1, lower_run(w, 1, 2, a));
        if (b0 && is_q_highest(*b0, 3, a)) {
          rec.check(e1bar_zero, ctx(n, w) + " q(3)-highest lift forces e_1bar w = 0", "0", show(e_odd1(w)));
        }
      }
    });
  }
}

// (12...n)^{x_n} (x) ... (x) (1)^{x_1}
Word staircase(const std::vector<int>& x) {
  std::vector<Letter> letters;
  for (int m = static_cast<int>(x.size()); m >= 1; --m) {
    for (int rep = 0; rep < x[m - 1]; ++rep) {
      for (int k = 1; k <= m; ++k) letters.push_back(static_cast<Letter>(k));
    }
  }
  return Word(std::move(letters));
}

void check_swib0(const Word& b, Alphabet a, Recorder& rec) {
  const int n = a.rank();
  const Weight wt = weight(b, a);
  const std::string base = ctx(n, b);
  for (int j = 1; j <= n; ++j) {
    if (!(wt + Weight::unit(n, j)).is_partition()) continue;
    const std::string where = base + " j=" + std::to_string(j);
    auto b0 = prefix(1, lower_chain(b, j, a));
    rec.check(b0 && is_gl_highest(*b0, n, a), where + " b0 gl-highest", "gl-highest",
              b0 ? b0->to_string() : "0");
    if (!b0) continue;

    for (int i = 1; i < n; ++i) {
      std::optional<Word> lhs;
      std::optional<Word> rhs;
      std::string form;
      if (i >= j + 1) {
        lhs = weyl_action(*b0, w_elem(i), a);
        rhs = prefix(3, lower_run(weyl_action(b, w_elem(i), a), 3, j + 1, a));
        form = "3 (x) f_3...f_{j+1} S_{w_i} b";
      } else if (i == j) {
        lhs = weyl_action(*b0, w_elem(i), a);
        rhs = prefix(1, weyl_action(b, w_elem(i), a));
        form = "1 (x) S_{w_i} b";
      } else if (i == j - 1) {
        lhs = weyl_action(*b0, w_elem(i), a);
        rhs = prefix(1, f_even(weyl_action(b, w_elem(i), a), 1, a));
        form = "1 (x) f_1 S_{w_i} b";
      } else {
        auto b_prime = lower_run(b, i + 2, j - 1, a);
        lhs = weyl_action(*b0, u_elem(i), a);
        rhs = b_prime ? prefix(1, lower_run(weyl_action(*b_prime, u_elem(i), a), 1, 2, a))
                      : std::nullopt;
        form = "1 (x) f_1 f_2 S_{u_i} b'";
      }
      rec.check(lhs == rhs, where + " i=" + std::to_string(i) + " " + form, show(rhs), show(lhs));
    }
  }
}

void suite_swib0(const VerifyBounds& b, Recorder& rec) {
  for (int n = 2; n <= b.n_max; ++n) {
    const Alphabet a(n);
    // staircase vectors with every x_m in {0,1,2}
    std::vector<int> x(n, 0);
    while (true) {
      const Word w = staircase(x);
      rec.check(is_gl_highest(w, n, a), ctx(n, w) + " staircase gl-highest", "gl-highest", "no");
      check_swib0(w, a, rec);
      int m = 0;
      while (m < n && x[m] == 2) x[m++] = 0;
      if (m == n) break;
      ++x[m];
    }
    // every gl-highest word, plus part (a): gl-highest words of B (x) B^{(x)N-1}
    // are exactly the 1 (x) f_1...f_{j-1} b
    std::set<Word> previous{Word{}};
    for (int len = 1; len <= b.power_max; ++len) {
      std::set<Word> brute;
      for_each_word(a, len, [&](const Word& w) {
        if (is_gl_highest(w, n, a)) brute.insert(w);
      });
      std::set<Word> generated;
      for (const Word& g : previous) {
        check_swib0(g, a, rec);
        for (int j = 1; j <= n; ++j) {
          if (!(weight(g, a) + Weight::unit(n, j)).is_partition()) continue;
          if (auto b0 = prefix(1, lower_chain(g, j, a))) generated.insert(*b0);
        }
      }
      rec.check(brute == generated, "n=" + std::to_string(n) + " N=" + std::to_string(len) +
                                        " gl-highest words",
                std::to_string(brute.size()), std::to_string(generated.size()));
      previous = std::move(brute);
    }
  }
}

void suite_branching(const VerifyBounds& b, Recorder& rec) {
  for (int n = 2; n <= b.n_max; ++n) {
    const Alphabet a(n);
    std::map<StrictPartition, std::pair<CanonicalCode, WeightPolynomial>> reference;
    auto ref = [&](const StrictPartition& shape) -> const auto& {
      auto it = reference.find(shape);
      if (it == reference.end()) {
        const Component c = highest_weight_crystal(shape, a);
        it = reference.emplace(shape, std::pair(canonical_form(c), character(c))).first;
      }
      return it->second;
    };
    const WeightPolynomial ch_b = character(build_tensor_power(a, 1));

    for (int len = 1; len < b.power_max; ++len) {
      const CrystalGraph g = build_tensor_power(a, len);
      for (const Component& c : components(g)) {
        const std::string where = "n=" + std::to_string(n) + " hw=" + c.hw_word().to_string();
        if (c.hw_nodes.size() != 1) {
          rec.fail(where, "one highest weight node", std::to_string(c.hw_nodes.size()));
          continue;
        }
        std::vector<StrictPartition> expected;
        for (int j = 1; j <= n; ++j) {
          const Weight mu = c.hw_weight() + Weight::unit(n, j);
          if (mu.is_strict_partition()) expected.push_back(StrictPartition::from_weight(mu));
        }
        std::sort(expected.rbegin(), expected.rend());

        std::vector<BranchPiece> pieces;
        try {
          pieces = branch(c);
        } catch (const std::exception& e) {
          rec.fail(where, "branch succeeds", e.what());
          continue;
        }
        std::vector<StrictPartition> got;
        WeightPolynomial sum(n);
        for (const BranchPiece& p : pieces) got.push_back(p.shape);
        auto show_list = [](const std::vector<StrictPartition>& v) {
          std::string s;
          for (const auto& p : v) s += p.to_string();
          return s;
        };
        rec.check(got == expected, where + " branch shapes", show_list(expected), show_list(got));
        for (const BranchPiece& p : pieces) {
          const auto& [code, ch] = ref(p.shape);
          rec.check(p.component.hw_nodes.size() == 1 && canonical_form(p.component) == code,
                    where + " piece " + p.shape.to_string(), "isomorphic to B" + p.shape.to_string(),
                    "size " + std::to_string(p.component.size()));
          sum = sum + ch;
        }
        rec.check(ch_b * character(c) == sum, where + " character identity",
                  std::to_string((ch_b * character(c)).total()), std::to_string(sum.total()));
      }
    }
  }
}

void suite_reading(const VerifyBounds& b, Recorder& rec) {
  const std::vector<ReadingStyle> styles{ReadingStyle::middle_eastern, ReadingStyle::far_eastern};
  for (int n = 2; n <= b.n_max; ++n) {
    const Alphabet a(n);
    for (int size = 1; size <= b.shape_max; ++size) {
      for (const StrictPartition& shape : strict_partitions_of(size)) {
        const auto tableaux = enumerate_ssyt(shape, a);
        const std::string base = "n=" + std::to_string(n) + " shape=" + shape.to_string();
        for (const ShiftedTableau& t : tableaux) {
          for (int s = 0; s < OperatorLabel::slot_count(a); ++s) {
            const OperatorLabel label = OperatorLabel::from_slot(s, a);
            for (Direction d : {Direction::raise, Direction::lower}) {
              std::optional<ShiftedTableau> image[2];
              bool escaped = false;
              for (int k = 0; k < 2; ++k) {
                try {
                  image[k] = tableau_op(t, label, d, styles[k], a);
                } catch (const std::logic_error& e) {
                  escaped = true;
                  rec.fail(base + " T=" + t.to_string(), "semistandard image", e.what());
                }
              }
              if (escaped) continue;
              auto name = [](const std::optional<ShiftedTableau>& x) {
                return x ? x->to_string() : std::string("0");
              };
              rec.check(image[0] == image[1],
                        base + " T=" + t.to_string() + " label=" + label.token() +
                            (d == Direction::raise ? " raise" : " lower"),
                        name(image[0]), name(image[1]));
            }
          }
        }
        if (shape.length() <= n) {
          const Weight top = shape.as_weight(n);
          std::size_t with_top_weight = 0;
          for (const ShiftedTableau& t : tableaux) {
            if (weight(reading(t, styles[0]), a) == top) ++with_top_weight;
          }
          const Word hw = reading(highest_tableau(shape, a), styles[0]);
          rec.check(with_top_weight == 1 && is_highest_weight(hw, a),
                    base + " unique weight-lambda tableau", "1, highest",
                    std::to_string(with_top_weight));
        }
      }
    }
  }
}

void suite_weyl(const VerifyBounds& b, Recorder& rec) {
  for (int n = 2; n <= b.n_max; ++n) {
    const Alphabet a(n);
    for_each_word_upto(a, b.power_max, [&](const Word& w) {
      const Weight wt = weight(w, a);
      for (int i = 1; i < n; ++i) {
        const Word s = s_action(w, i, a);
        const std::string where = ctx(n, w) + " S_" + std::to_string(i);
        rec.check(s_action(s, i, a) == w, where + " involution", w.to_string(),
                  s_action(s, i, a).to_string());
        rec.check(weight(s, a) == wt.reflect(i), where + " weight", wt.reflect(i).to_string(),
                  weight(s, a).to_string());
        // definition by iterating f_i / e_i
        std::optional<Word> iter = w;
        const int h = wt.h(i);
        for (int k = 0; k < std::abs(h) && iter; ++k) {
          iter = h > 0 ? f_even(*iter, i, a) : e_even(*iter, i, a);
        }
        rec.check(iter == s, where + " string reversal", show(iter), s.to_string());
        for (int j = i + 1; j < n; ++j) {
          const WeylWord lhs = j == i + 1 ? WeylWord{{i, j, i}} : WeylWord{{i, j}};
          const WeylWord rhs = j == i + 1 ? WeylWord{{j, i, j}} : WeylWord{{j, i}};
          const Word x = weyl_action(w, lhs, a);
          const Word y = weyl_action(w, rhs, a);
          rec.check(x == y, where + " braid with S_" + std::to_string(j), x.to_string(),
                    y.to_string());
        }
      }
    });
  }
}

void suite_counts(const VerifyBounds& b, Recorder& rec) {
  for (int n = 2; n <= b.n_max; ++n) {
    const Alphabet a(n);
    std::size_t total = 1;
    for (int len = 1; len <= b.power_max; ++len) {
      total *= static_cast<std::size_t>(n);
      const std::string where = "n=" + std::to_string(n) + " N=" + std::to_string(len);
      std::map<StrictPartition, Multiplicity> table;
      try {
        table = multiplicity_table(a, len);
      } catch (const std::exception& e) {
        rec.fail(where, "multiplicity table", e.what());
        continue;
      }
      std::size_t covered = 0;
      for (const auto& [shape, m] : table) {
        covered += m.count * m.component_size;
        rec.check(shape.size() == len && shape.length() <= n, where + " " + shape.to_string(),
                  "admissible shape", "present");
      }
      rec.check(covered == total, where + " sum mult*size", std::to_string(total),
                std::to_string(covered));
      for (const StrictPartition& shape : strict_partitions_of(len)) {
        if (shape.length() > n) continue;
        auto it = table.find(shape);
        const std::uint64_t got = it == table.end() ? 0 : it->second.count;
        rec.check(got == shifted_syt_count(shape), where + " multiplicity " + shape.to_string(),
                  std::to_string(shifted_syt_count(shape)), std::to_string(got));
      }
    }
  }
}

using SuiteFn = void (*)(const VerifyBounds&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"nilpotency", suite_nilpotency}, {"assoc", suite_assoc},   {"charhw", suite_charhw},
      {"strict", suite_strict},         {"e1f1", suite_e1f1},     {"lemmaA", suite_lifts},
      {"swib0", suite_swib0},           {"branching", suite_branching},
      {"reading", suite_reading},       {"weyl", suite_weyl},     {"counts", suite_counts},
  };
  return suites;
}

std::string describe(const std::string& name, const VerifyBounds& b) {
  std::string s = "n-max=" + std::to_string(b.n_max);
  if (name == "reading") return s + " shape-max=" + std::to_string(b.shape_max);
  s += " power-max=" + std::to_string(b.power_max);
  if (name == "assoc") {
    s += " trials=" + std::to_string(b.assoc_trials) + " length-max=" +
         std::to_string(b.assoc_length_max) + " seed=" + std::to_string(b.seed);
  }
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport run_suite(const std::string& name, const VerifyBounds& bounds,
                             const FailureSink& sink) {
  if (bounds.n_max < 2) throw std::invalid_argument("n-max must be >= 2");
  if (bounds.power_max < 0 || bounds.shape_max < 0) {
    throw std::invalid_argument("bounds must be nonnegative");
  }
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    VerificationReport report;
    report.suite = name;
    report.parameters = describe(name, bounds);
    Recorder rec(report, sink);
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(bounds, rec);
    } catch (const std::exception& e) {
      rec.fail("suite " + name + " aborted", "completion", std::string("exception: ") + e.what());
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS " : "FAIL ") << r.suite << " " << r.parameters
      << " checked=" << r.checked << " failures=" << r.failure_count << "\n";
  for (const Failure& f : r.failures) {
    out << "  failure: " << f.input << " | expected " << f.expected << " | actual " << f.actual
        << "\n";
  }
  if (r.failure_count > r.failures.size()) {
    out << "  (" << r.failure_count - r.failures.size() << " further failures not shown)\n";
  }
  return out.str();
}

std::string report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["parameters"] = r.parameters;
  j["checked"] = r.checked;
  j["failure_count"] = r.failure_count;
  j["passed"] = r.passed();
  j["failures"] = nlohmann::ordered_json::array();
  for (const Failure& f : r.failures) {
    j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return j.dump(2) + "\n";
}

}  // namespace qcrystal

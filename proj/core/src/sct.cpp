#include "superplancherel/sct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "superplancherel/error.hpp"
#include "superplancherel/rng.hpp"

namespace spl {
namespace {

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += (out.empty() ? "" : "; ") + l;
  return out;
}

Complex frobenius_raw(const ClassFunction& phi, const ClassFunction& psi, const std::vector<std::vector<int>>& classes,
                      int order) {
  Complex sum = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    sum += static_cast<double>(classes[k].size()) * phi[k] * std::conj(psi[k]);
  }
  return sum / static_cast<double>(order);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, int identity) : mul_(std::move(mul)), identity_(identity) {
  const int n = order();
  if (n < 1 || n > kMaxGroupOrder) {
    throw InvalidTheory("group order must be in 1.." + std::to_string(kMaxGroupOrder) + ", got " + std::to_string(n));
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul_[a].size()) != n) {
      throw InvalidTheory("multiplication table row " + std::to_string(a) + " has the wrong length");
    }
    for (int b = 0; b < n; ++b) {
      if (mul_[a][b] < 0 || mul_[a][b] >= n) {
        throw InvalidTheory("product " + std::to_string(a) + "*" + std::to_string(b) + " is out of range");
      }
    }
  }
  if (identity_ < 0 || identity_ >= n) throw InvalidTheory("identity index out of range");
  for (int a = 0; a < n; ++a) {
    if (mul_[identity_][a] != a || mul_[a][identity_] != a) {
      throw InvalidTheory("identity law fails at element " + std::to_string(a));
    }
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul_[a][b] == identity_ && mul_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw InvalidTheory("element " + std::to_string(a) + " has no inverse");
  }
  auto check = [&](int a, int b, int c) {
    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
      throw InvalidTheory("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")");
    }
  };
  if (n <= kExhaustiveAssociativityOrder) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    SplitMix64 rng(0x5eed'a550c1a7ULL);
    for (int s = 0; s < 200'000; ++s) {
      const auto un = static_cast<std::uint64_t>(n);
      check(static_cast<int>(rng.uniform_below(un)), static_cast<int>(rng.uniform_below(un)),
            static_cast<int>(rng.uniform_below(un)));
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidTheory("cyclic group order must be positive");
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return FiniteGroup(std::move(mul), 0);
}

FiniteGroup FiniteGroup::elementary_abelian(int p, int k) {
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int x = a, y = b, place = 1, sum = 0;
      for (int i = 0; i < k; ++i) {
        sum += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      mul[a][b] = sum;
    }
  }
  return FiniteGroup(std::move(mul), 0);
}

TheoryReport check_theory(const FiniteGroup& group, const std::vector<std::vector<int>>& superclasses,
                          const std::vector<ClassFunction>& characters) {
  TheoryReport report;
  const int n = group.order();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < superclasses.size(); ++k) {
    if (superclasses[k].empty()) report.failures.push_back("superclass " + std::to_string(k) + " is empty");
    for (int g : superclasses[k]) {
      if (g < 0 || g >= n) {
        report.failures.push_back("superclass " + std::to_string(k) + " holds out-of-range element " +
                                  std::to_string(g));
        continue;
      }
      ++seen[g];
    }
  }
  for (int g = 0; g < n; ++g) {
    if (seen[g] != 1) {
      report.failures.push_back("element " + std::to_string(g) + " lies in " + std::to_string(seen[g]) +
                                " superclasses");
    }
  }
  if (superclasses.size() != characters.size()) {
    report.failures.push_back(std::to_string(superclasses.size()) + " superclasses but " +
                              std::to_string(characters.size()) + " supercharacters");
  }
  const bool identity_alone = std::any_of(superclasses.begin(), superclasses.end(), [&](const auto& k) {
    return k.size() == 1 && k.front() == group.identity();
  });
  if (!identity_alone) report.failures.push_back("{identity} is not a superclass");
  for (std::size_t c = 0; c < characters.size(); ++c) {
    if (characters[c].size() != superclasses.size()) {
      report.failures.push_back("supercharacter " + std::to_string(c) + " has " +
                                std::to_string(characters[c].size()) + " values for " +
                                std::to_string(superclasses.size()) + " superclasses");
    }
  }
  if (!report.ok()) return report;

  std::vector<double> self(characters.size());
  for (std::size_t a = 0; a < characters.size(); ++a) {
    const Complex s = frobenius_raw(characters[a], characters[a], superclasses, n);
    self[a] = s.real();
    if (!(s.real() > kSctTolerance) || std::abs(s.imag()) > kSctTolerance * std::max(1.0, s.real())) {
      std::ostringstream msg;
      msg << "supercharacter " << a << " has self-product " << s.real() << (s.imag() < 0 ? "" : "+") << s.imag()
          << "i, not positive";
      report.failures.push_back(msg.str());
    }
  }
  for (std::size_t a = 0; a < characters.size(); ++a) {
    for (std::size_t b = a + 1; b < characters.size(); ++b) {
      const double v = std::abs(frobenius_raw(characters[a], characters[b], superclasses, n));
      report.max_offdiagonal = std::max(report.max_offdiagonal, v);
      const double scale = std::max(1.0, std::sqrt(std::abs(self[a] * self[b])));
      if (v > kSctTolerance * scale) {
        std::ostringstream msg;
        msg << "supercharacters " << a << " and " << b << " are not orthogonal (|<,>| = " << v << ")";
        report.failures.push_back(msg.str());
      }
    }
  }
  if (!report.ok()) return report;

  // the supercharacters must decompose the regular character: sum chi(1)^2 / <chi, chi> = |G|
  const auto id_class = static_cast<std::size_t>(std::find_if(superclasses.begin(), superclasses.end(),
                                                              [&](const auto& k) {
                                                                return k.size() == 1 &&
                                                                       k.front() == group.identity();
                                                              }) -
                                                 superclasses.begin());
  Complex total = 0;
  for (std::size_t a = 0; a < characters.size(); ++a) {
    const Complex deg = characters[a][id_class];
    total += deg * deg / self[a];
  }
  if (std::abs(total - static_cast<double>(n)) > kSctTolerance * n) {
    std::ostringstream msg;
    msg << "squared degrees over self-products sum to " << total.real() << ", not the group order " << n;
    report.failures.push_back(msg.str());
  }
  return report;
}

SuperTheory::SuperTheory(FiniteGroup group, std::vector<std::vector<int>> superclasses,
                         std::vector<ClassFunction> characters)
    : group_(std::move(group)), superclasses_(std::move(superclasses)), characters_(std::move(characters)) {
  const TheoryReport report = check_theory(group_, superclasses_, characters_);
  if (!report.ok()) throw InvalidTheory("invalid supercharacter theory: " + join(report.failures));
  class_of_.assign(static_cast<std::size_t>(group_.order()), -1);
  for (std::size_t k = 0; k < superclasses_.size(); ++k) {
    for (int g : superclasses_[k]) class_of_[g] = static_cast<int>(k);
  }
}

Complex frobenius(const ClassFunction& phi, const ClassFunction& psi, const SuperTheory& t) {
  if (phi.size() != t.superclasses().size() || psi.size() != t.superclasses().size()) {
    throw ValidationError("class functions need one value per superclass");
  }
  return frobenius_raw(phi, psi, t.superclasses(), t.group().order());
}

double c_of(const ClassFunction& chi, const SuperTheory& t) {
  const Complex self = frobenius(chi, chi, t);
  if (std::abs(self) <= kSctTolerance) throw InvalidTheory("supercharacter has zero self-product");
  const Complex c = chi[t.identity_class()] / self;
  return c.real();
}

std::vector<double> superplancherel_measure(const SuperTheory& t) {
  std::vector<double> out;
  out.reserve(t.characters().size());
  const double order = t.group().order();
  for (std::size_t chi = 0; chi < t.characters().size(); ++chi) {
    const Complex deg = t.degree(static_cast<int>(chi));
    const Complex self = frobenius(t.characters()[chi], t.characters()[chi], t);
    out.push_back((deg * deg / (order * self)).real());
  }
  return out;
}

OrthogonalityReport second_orthogonality(const FiniteGroup& group, const std::vector<std::vector<int>>& superclasses,
                                         const std::vector<ClassFunction>& characters) {
  OrthogonalityReport report;
  const double order = group.order();
  if (superclasses.size() != characters.size()) {
    throw ValidationError("second orthogonality needs as many supercharacters as superclasses");
  }
  std::vector<Complex> weight;
  for (const auto& chi : characters) {
    if (chi.size() != superclasses.size()) throw ValidationError("class functions need one value per superclass");
    // c(chi) / chi(1) = 1 / <chi, chi>
    weight.push_back(1.0 / frobenius_raw(chi, chi, superclasses, group.order()));
  }
  for (std::size_t k1 = 0; k1 < superclasses.size(); ++k1) {
    for (std::size_t k2 = 0; k2 < superclasses.size(); ++k2) {
      Complex sum = 0;
      for (std::size_t c = 0; c < characters.size(); ++c) {
        sum += weight[c] * characters[c][k1] * std::conj(characters[c][k2]);
      }
      const double expected = k1 == k2 ? order / static_cast<double>(superclasses[k1].size()) : 0.0;
      report.max_deviation = std::max(report.max_deviation, std::abs(sum - expected));
    }
  }
  report.tolerance = kSctTolerance * order;
  report.pass = report.max_deviation <= report.tolerance;
  return report;
}

OrthogonalityReport second_orthogonality(const SuperTheory& t) {
  return second_orthogonality(t.group(), t.superclasses(), t.characters());
}

SubgroupEmbedding::SubgroupEmbedding(SuperTheory sub, SuperTheory group, std::vector<int> injection)
    : sub_(std::move(sub)), group_(std::move(group)), injection_(std::move(injection)) {
  const FiniteGroup& h = sub_.group();
  const FiniteGroup& g = group_.group();
  if (static_cast<int>(injection_.size()) != h.order()) {
    throw InvalidTheory("injection has " + std::to_string(injection_.size()) + " entries for a subgroup of order " +
                        std::to_string(h.order()));
  }
  std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
  for (int x : injection_) {
    if (x < 0 || x >= g.order()) throw InvalidTheory("injection maps outside the group");
    if (hit[x]) throw InvalidTheory("injection is not injective at group element " + std::to_string(x));
    hit[x] = 1;
  }
  for (int a = 0; a < h.order(); ++a) {
    for (int b = 0; b < h.order(); ++b) {
      if (injection_[h.multiply(a, b)] != g.multiply(injection_[a], injection_[b])) {
        throw InvalidTheory("injection is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) +
                            ")");
      }
    }
  }
  for (const auto& cls : sub_.superclasses()) {
    const int target = group_.class_of(injection_[cls.front()]);
    for (int x : cls) {
      if (group_.class_of(injection_[x]) != target) {
        throw InvalidTheory("inconsistent embedding: subgroup superclass of element " + std::to_string(cls.front()) +
                            " meets two superclasses of the group");
      }
    }
    image_class_.push_back(target);
  }
}

ClassFunction restrict_to(const SubgroupEmbedding& e, const ClassFunction& psi) {
  ClassFunction out;
  for (int h = 0; h < e.sub().class_count(); ++h) out.push_back(psi[e.image_class(h)]);
  return out;
}

ClassFunction superinduce(const SubgroupEmbedding& e, const ClassFunction& phi) {
  const SuperTheory& g = e.group();
  ClassFunction out(static_cast<std::size_t>(g.class_count()), 0.0);
  for (int h = 0; h < e.sub().class_count(); ++h) {
    out[e.image_class(h)] += e.sub().class_size(h) * phi[h];
  }
  const double ratio = static_cast<double>(g.group().order()) / e.sub().group().order();
  for (int k = 0; k < g.class_count(); ++k) out[k] *= ratio / g.class_size(k);
  return out;
}

ReciprocityReport reciprocity_check(const SubgroupEmbedding& e, const ClassFunction& phi, const ClassFunction& psi) {
  ReciprocityReport r;
  r.lhs = frobenius(superinduce(e, phi), psi, e.group());
  r.rhs = frobenius(phi, restrict_to(e, psi), e.sub());
  r.deviation = std::abs(r.lhs - r.rhs);
  r.pass = r.deviation <= kSctTolerance * std::max(1.0, std::abs(r.lhs));
  return r;
}

std::vector<std::vector<double>> transition(const SubgroupEmbedding& e) {
  const SuperTheory& g = e.group();
  const SuperTheory& h = e.sub();
  const double ratio = static_cast<double>(h.group().order()) / g.group().order();
  std::vector<std::vector<double>> rho;
  for (std::size_t gamma = 0; gamma < h.characters().size(); ++gamma) {
    const ClassFunction induced = superinduce(e, h.characters()[gamma]);
    const Complex gamma_deg = h.degree(static_cast<int>(gamma));
    auto& row = rho.emplace_back();
    for (std::size_t chi = 0; chi < g.characters().size(); ++chi) {
      const ClassFunction& c = g.characters()[chi];
      const Complex value =
          ratio * (g.degree(static_cast<int>(chi)) / gamma_deg) * frobenius(induced, c, g) / frobenius(c, c, g);
      row.push_back(value.real());
    }
  }
  return rho;
}

TransitionReport check_transition(const SubgroupEmbedding& e) {
  TransitionReport r;
  r.matrix = transition(e);
  const std::vector<double> spl_h = superplancherel_measure(e.sub());
  const std::vector<double> spl_g = superplancherel_measure(e.group());
  for (const auto& row : r.matrix) {
    double sum = 0;
    for (double v : row) sum += v;
    r.max_row_sum_deviation = std::max(r.max_row_sum_deviation, std::abs(sum - 1.0));
  }
  for (std::size_t chi = 0; chi < spl_g.size(); ++chi) {
    double pushed = 0;
    for (std::size_t gamma = 0; gamma < spl_h.size(); ++gamma) pushed += r.matrix[gamma][chi] * spl_h[gamma];
    r.max_pushforward_deviation = std::max(r.max_pushforward_deviation, std::abs(pushed - spl_g[chi]));
  }
  r.pass = r.max_row_sum_deviation <= kSctTolerance && r.max_pushforward_deviation <= kSctTolerance;
  return r;
}

SuperTheory cyclic_irreducible_theory(int n) {
  FiniteGroup g = FiniteGroup::cyclic(n);
  std::vector<std::vector<int>> classes;
  std::vector<ClassFunction> chars;
  for (int k = 0; k < n; ++k) classes.push_back({k});
  for (int m = 0; m < n; ++m) {
    ClassFunction row;
    for (int k = 0; k < n; ++k) {
      // reduce m k mod n first so the angle stays in [0, 2 pi)
      row.push_back(std::polar(1.0, 2.0 * std::numbers::pi * ((m * k) % n) / n));
    }
    chars.push_back(std::move(row));
  }
  return SuperTheory(std::move(g), std::move(classes), std::move(chars));
}

SuperTheory coarse_theory(const FiniteGroup& group) {
  const int n = group.order();
  if (n == 1) return SuperTheory(group, {{group.identity()}}, {{1.0}});
  std::vector<int> rest;
  for (int g = 0; g < n; ++g) {
    if (g != group.identity()) rest.push_back(g);
  }
  return SuperTheory(group, {{group.identity()}, rest}, {{1.0, 1.0}, {static_cast<double>(n - 1), -1.0}});
}

std::vector<int> cyclic_inclusion(int m, int n) {
  if (m < 1 || n % m != 0) {
    throw ValidationError("Z/" + std::to_string(m) + " does not embed in Z/" + std::to_string(n));
  }
  std::vector<int> out;
  for (int k = 0; k < m; ++k) out.push_back(k * (n / m));
  return out;
}

SubgroupEmbedding identity_embedding(const SuperTheory& t) {
  std::vector<int> inj(static_cast<std::size_t>(t.group().order()));
  for (int g = 0; g < t.group().order(); ++g) inj[g] = g;
  return SubgroupEmbedding(t, t, std::move(inj));
}

}  // namespace spl

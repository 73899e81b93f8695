#include "bvalg/homology.hpp"

#include "bvalg/bv.hpp"

namespace bvalg {

ChainComplex::ChainComplex(FieldSpec field, int step, std::vector<std::size_t> dims)
    : field_(field), step_(step), dims_(std::move(dims)) {}

std::size_t ChainComplex::dimension(int grade) const {
  if (grade < 0 || grade > top())
    return 0;
  return dims_[static_cast<std::size_t>(grade)];
}

void ChainComplex::set_boundary(int grade, Matrix m) {
  if (m.cols() != dimension(grade) || m.rows() != dimension(grade + step_))
    throw AlgebraError("boundary matrix out of grade " + std::to_string(grade) + " has the wrong shape");
  maps_.insert_or_assign(grade, std::move(m));
}

std::optional<Matrix> ChainComplex::boundary(int grade) const {
  if (unknown_out_.count(grade))
    return std::nullopt;
  if (auto it = maps_.find(grade); it != maps_.end())
    return it->second;
  return Matrix(field_, dimension(grade + step_), dimension(grade));
}

bool ChainComplex::incoming_known(int grade) const {
  if (unknown_in_.count(grade))
    return false;
  int source = grade - step_;
  if (source < 0 || source > top())
    return true;
  return !unknown_out_.count(source);
}

void ChainComplex::check_square_zero() const {
  for (int g = 0; g <= top(); ++g) {
    int next = g + step_;
    if (next < 0 || next > top() || step_ == 0)
      continue;
    auto first = boundary(g);
    auto second = boundary(next);
    if (!first || !second)
      continue;
    if (!(*second * *first).is_zero())
      throw AlgebraError("boundary composite out of grade " + std::to_string(g) + " is not zero");
  }
}

namespace {

int grade_of(const Monomial& m, Grading grading) {
  return grading == Grading::TotalDegree ? m.degree() : m.wordlength();
}

} // namespace

ChainComplex ChainComplex::from_operator(const GradedMap& op, Grading grading) {
  const FreeAlgebra& alg = op.algebra();
  const int D = alg.max_degree();
  const int k = op.degree();
  auto all = alg.basis_up_to(D);

  int top = 0;
  for (const auto& m : all)
    top = std::max(top, grade_of(m, grading));

  std::optional<int> step;
  if (grading == Grading::TotalDegree)
    step = k;
  for (const auto& m : all) {
    if (grading == Grading::TotalDegree || m.degree() + k > D)
      continue;
    auto v = op.value(m);
    if (!v)
      continue;
    for (const auto& [t, c] : v->terms()) {
      int s = t.wordlength() - m.wordlength();
      if (step && *step != s)
        throw AlgebraError("operator does not have a fixed wordlength step");
      step = s;
    }
  }
  if (!step)
    step = -1;

  std::vector<std::vector<Monomial>> bases(static_cast<std::size_t>(top) + 1);
  for (const auto& m : all)
    bases[static_cast<std::size_t>(grade_of(m, grading))].push_back(m);
  std::vector<std::size_t> dims;
  for (const auto& b : bases)
    dims.push_back(b.size());
  ChainComplex c(alg.field(), *step, dims);
  c.bases_ = bases;

  std::vector<std::map<Monomial, std::size_t>> index(bases.size());
  for (std::size_t g = 0; g < bases.size(); ++g)
    for (std::size_t i = 0; i < bases[g].size(); ++i)
      index[g].emplace(bases[g][i], i);

  // Monomials just above the window whose image falls back inside it.
  FreeAlgebra unbounded = alg.with_max_degree(FreeAlgebra::kUnbounded);
  for (int d = D + 1; d <= D - k; ++d)
    for (const auto& m : unbounded.basis(d)) {
      if (grading == Grading::TotalDegree) {
        c.mark_incoming_unknown(d + k);
        break;
      }
      c.mark_incoming_unknown(m.wordlength() + *step);
    }

  for (int g = 0; g <= top; ++g) {
    int target = g + *step;
    const auto& src = bases[static_cast<std::size_t>(g)];
    if (target < 0 || target > top) {
      // An empty target inside the computable range is a genuine zero map.
      bool leaves = false;
      if (grading == Grading::TotalDegree)
        leaves = target > D && !unbounded.basis(target).empty();
      else
        for (const auto& m : src)
          leaves = leaves || m.degree() + k > D;
      if (leaves && !src.empty())
        c.mark_outgoing_unknown(g);
      continue;
    }
    Matrix mat(alg.field(), bases[static_cast<std::size_t>(target)].size(), src.size());
    bool known = true;
    for (std::size_t j = 0; j < src.size() && known; ++j) {
      if (src[j].degree() + k > D) {
        known = false;
        break;
      }
      auto v = op.value(src[j]);
      if (!v || v->out_of_window()) {
        known = false;
        break;
      }
      for (const auto& [t, coeff] : v->terms())
        mat.at(index[static_cast<std::size_t>(target)].at(t), j) = coeff;
    }
    if (known)
      c.set_boundary(g, std::move(mat));
    else
      c.mark_outgoing_unknown(g);
  }
  c.check_square_zero();
  return c;
}

ChainComplex build_ce_complex(const LiePresentation& lie, int max_degree) {
  if (lie.shift() != 0)
    throw AlgebraError("the Chevalley-Eilenberg complex needs shift n = 0, got " + std::to_string(lie.shift()));
  BVStructure s = BVStructure::free(lie, max_degree);
  return ChainComplex::from_operator(bv_map(s), Grading::TotalDegree);
}

std::vector<std::optional<long>> betti(const ChainComplex& c) {
  std::vector<std::optional<long>> out;
  for (int g = 0; g <= c.top(); ++g) {
    auto outgoing = c.boundary(g);
    if (!outgoing || !c.incoming_known(g)) {
      out.push_back(std::nullopt);
      continue;
    }
    long dim = static_cast<long>(c.dimension(g));
    long r_out = static_cast<long>(rank(*outgoing));
    long r_in = 0;
    int source = g - c.step();
    if (c.step() != 0 && source >= 0 && source <= c.top())
      r_in = static_cast<long>(rank(*c.boundary(source)));
    if (c.step() == 0)
      r_in = r_out;
    out.push_back(dim - r_out - r_in);
  }
  return out;
}

long euler_characteristic_of_chains(const ChainComplex& c) {
  long chi = 0;
  for (int g = 0; g <= c.top(); ++g)
    chi += (g % 2 == 0 ? 1 : -1) * static_cast<long>(c.dimension(g));
  return chi;
}

} // namespace bvalg

#include "wreathkit/morphism.hpp"

#include <numeric>

namespace wreathkit {

std::int64_t total_dim(const std::vector<SpaceRef>& spaces) {
  std::int64_t d = 1;
  for (const auto& s : spaces) d *= s.dim;
  return d;
}

std::vector<std::int64_t> dims_of(const std::vector<SpaceRef>& spaces) {
  std::vector<std::int64_t> d;
  d.reserve(spaces.size());
  for (const auto& s : spaces) d.push_back(s.dim);
  return d;
}

std::string spaces_str(const std::vector<SpaceRef>& spaces) {
  if (spaces.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (i) s += "*";
    s += spaces[i].name;
  }
  return s;
}

Morphism::Morphism(std::vector<SpaceRef> dom, std::vector<SpaceRef> cod, Mat entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(entries)) {
  if (static_cast<std::int64_t>(mat_.rows()) != total_dim(cod_) ||
      static_cast<std::int64_t>(mat_.cols()) != total_dim(dom_))
    throw ShapeMismatch("morphism entries " + std::to_string(mat_.rows()) + "x" +
                        std::to_string(mat_.cols()) + " vs signature " + sig_str());
}

Morphism Morphism::relabeled(std::vector<SpaceRef> dom, std::vector<SpaceRef> cod) const {
  return Morphism(std::move(dom), std::move(cod), mat_);
}

Morphism Morphism::operator+(const Morphism& o) const {
  return Morphism(dom_, cod_, mat_ + o.mat_);
}

Morphism Morphism::operator-(const Morphism& o) const {
  return Morphism(dom_, cod_, mat_ - o.mat_);
}

Morphism Morphism::scaled(const Scalar& s) const { return Morphism(dom_, cod_, mat_.scaled(s)); }

std::string Morphism::sig_str() const { return spaces_str(dom_) + " -> " + spaces_str(cod_); }

namespace {
std::vector<SpaceRef> concat(const std::vector<SpaceRef>& a, const std::vector<SpaceRef>& b) {
  std::vector<SpaceRef> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}
}  // namespace

Morphism kron(const Morphism& f, const Morphism& g) {
  return Morphism(concat(f.dom(), g.dom()), concat(f.cod(), g.cod()), f.mat().kron(g.mat()));
}

Morphism kron3(const Morphism& f, const Morphism& g, const Morphism& h) {
  return kron(kron(f, g), h);
}

Morphism kron4(const Morphism& a, const Morphism& b, const Morphism& c, const Morphism& d) {
  return kron(kron3(a, b, c), d);
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (dims_of(f.cod()) != dims_of(g.dom()))
    throw ShapeMismatch("compose: cod(f) = " + spaces_str(f.cod()) +
                        " does not match dom(g) = " + spaces_str(g.dom()));
  return Morphism(f.dom(), g.cod(), g.mat() * f.mat());
}

Morphism compose3(const Morphism& h, const Morphism& g, const Morphism& f) {
  return compose(h, compose(g, f));
}

Morphism compose4(const Morphism& k, const Morphism& h, const Morphism& g, const Morphism& f) {
  return compose(k, compose3(h, g, f));
}

bool mor_equal(const Morphism& f, const Morphism& g) {
  if (dims_of(f.dom()) != dims_of(g.dom()) || dims_of(f.cod()) != dims_of(g.cod()))
    throw ShapeMismatch("mor_equal: " + f.sig_str() + " vs " + g.sig_str());
  return f.mat() == g.mat();
}

Morphism identity(FieldSpec f, const std::vector<SpaceRef>& spaces) {
  return Morphism(spaces, spaces, Mat::identity(f, static_cast<std::size_t>(total_dim(spaces))));
}

Morphism identity(FieldSpec f, const SpaceRef& space) {
  return identity(f, std::vector<SpaceRef>{space});
}

Morphism zero_morphism(FieldSpec f, const std::vector<SpaceRef>& dom,
                       const std::vector<SpaceRef>& cod) {
  return Morphism(dom, cod,
                  Mat::zero(f, static_cast<std::size_t>(total_dim(cod)),
                            static_cast<std::size_t>(total_dim(dom))));
}

Morphism flip(FieldSpec f, const SpaceRef& x, const SpaceRef& y) {
  const auto dx = static_cast<std::size_t>(x.dim), dy = static_cast<std::size_t>(y.dim);
  Mat m(f, dx * dy, dx * dy);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dy; ++j)
      m.at(j * dx + i, i * dy + j) = Scalar::one(f);
  return Morphism({x, y}, {y, x}, std::move(m));
}

Morphism leg_permutation(FieldSpec f, const std::vector<SpaceRef>& source,
                         const std::vector<std::size_t>& order) {
  if (order.size() != source.size()) throw ShapeMismatch("leg_permutation: order length");
  std::vector<SpaceRef> target;
  target.reserve(order.size());
  for (std::size_t k : order) target.push_back(source.at(k));
  const auto n = source.size();
  const auto d = static_cast<std::size_t>(total_dim(source));
  Mat m(f, d, d);
  std::vector<std::int64_t> src_idx(n, 0);
  for (std::size_t col = 0; col < d; ++col) {
    // decode col as a source multi-index
    std::int64_t rest = static_cast<std::int64_t>(col);
    for (std::size_t k = n; k-- > 0;) {
      src_idx[k] = rest % source[k].dim;
      rest /= source[k].dim;
    }
    std::int64_t row = 0;
    for (std::size_t k = 0; k < n; ++k) row = row * target[k].dim + src_idx[order[k]];
    m.at(static_cast<std::size_t>(row), col) = Scalar::one(f);
  }
  return Morphism(source, target, std::move(m));
}

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

Scalar Rng::scalar(const FieldSpec& f) {
  if (f.is_rational()) {
    long long num = static_cast<long long>(below(9)) - 4;
    long long den = static_cast<long long>(below(3)) + 1;
    return Scalar::from_ratio(f, num, den);
  }
  return Scalar::from_int(f, static_cast<long long>(below(f.p)));
}

Scalar Rng::nonzero_scalar(const FieldSpec& f) {
  for (;;) {
    Scalar s = scalar(f);
    if (!s.is_zero()) return s;
  }
}

Morphism random_morphism(Rng& rng, FieldSpec f, const std::vector<SpaceRef>& dom,
                         const std::vector<SpaceRef>& cod) {
  Mat m(f, static_cast<std::size_t>(total_dim(cod)), static_cast<std::size_t>(total_dim(dom)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rng.scalar(f);
  return Morphism(dom, cod, std::move(m));
}

Morphism random_invertible(Rng& rng, FieldSpec f, const SpaceRef& x) {
  for (;;) {
    Morphism m = random_morphism(rng, f, {x}, {x});
    if (inverse(m.mat())) return m;
  }
}

}  // namespace wreathkit

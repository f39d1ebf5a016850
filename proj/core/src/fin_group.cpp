#include "spwb/fin_group.hpp"

#include <algorithm>
#include <fstream>

#include "spwb/error.hpp"
#include "spwb/parallel.hpp"
#include "spwb/symplectic.hpp"

namespace spwb {

namespace {

constexpr std::size_t kTableCap = 1500;  // full mult table up to this order
constexpr char kMagic[8] = {'S', 'P', 'W', 'B', 'F', 'G', '1', '\n'};

void put_u64(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, 8);
}

std::uint64_t get_u64(std::istream& is) {
  char b[8] = {};
  is.read(b, 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  return v;
}

void put_u32(std::ostream& os, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, 4);
}

std::uint32_t get_u32(std::istream& is) {
  char b[4] = {};
  is.read(b, 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  return v;
}

}  // namespace

std::string FinGroup::key(const RingMatrix& m) const {
  std::string s;
  s.reserve(static_cast<std::size_t>(dim_) * dim_ * 4);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      auto v = static_cast<std::uint32_t>(m(r, c));
      for (int i = 0; i < 4; ++i)
        s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
  return s;
}

int FinGroup::index_of(const RingMatrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return -1;
  auto it = index_.find(key(rm_reduce(ring_, m)));
  return it == index_.end() ? -1 : it->second;
}

FinGroup FinGroup::enumerate(const std::vector<RingMatrix>& gens, const Ring& R,
                             int dim, std::size_t cap) {
  if (dim < 0) fail(Err::ConfigError, "matrix dimension must be nonnegative");
  std::vector<RingMatrix> gs;
  gs.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.rows() != dim || g.cols() != dim)
      fail(Err::SizeMismatch, "generator size does not match the group dimension");
    RingMatrix gr = rm_reduce(R, g);
    if (!is_symplectic(R, gr)) fail(Err::NotSymplectic, "generator is not symplectic");
    gs.push_back(gr);
  }

  FinGroup G(R, dim);
  G.gen_prod_.assign(gs.size(), {});
  {
    RingMatrix id = RingMatrix::identity(dim);
    G.index_.emplace(G.key(id), 0);
    G.elems_.push_back(std::move(id));
    G.parent_.push_back(-1);
    G.via_gen_.push_back(-1);
  }
  // Level-synchronous closure: products over a frontier are keyed in
  // parallel, then deduplicated serially in (element, generator) order, so
  // the discovery order never depends on scheduling.
  std::size_t lo = 0, hi = 1;
  std::vector<std::string> keys;
  while (lo < hi) {
    std::size_t count = (hi - lo) * gs.size();
    keys.assign(count, {});
    parallel_for(count, default_thread_count(), [&](std::size_t i) {
      std::size_t t = lo + i / gs.size(), g = i % gs.size();
      keys[i] = G.key(rm_mul(R, gs[g], G.elems_[t]));
    });
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t t = lo + i / gs.size(), g = i % gs.size();
      auto it = G.index_.find(keys[i]);
      if (it == G.index_.end()) {
        if (G.elems_.size() >= cap)
          fail(Err::CapExceeded, "group enumeration exceeded the element cap");
        int id = static_cast<int>(G.elems_.size());
        it = G.index_.emplace(std::move(keys[i]), id).first;
        G.elems_.push_back(rm_mul(R, gs[g], G.elems_[t]));
        G.parent_.push_back(static_cast<int>(t));
        G.via_gen_.push_back(static_cast<int>(g));
      }
      G.gen_prod_[g].push_back(it->second);
    }
    lo = hi;
    hi = G.elems_.size();
  }
  G.gen_elem_.reserve(gs.size());
  for (const auto& g : gs) G.gen_elem_.push_back(G.index_.at(G.key(g)));
  G.finish(kTableCap);
  return G;
}

void FinGroup::finish(std::size_t table_cap) {
  std::size_t n = elems_.size();
  if (gen_prod_.empty() && !gen_elem_.empty()) {
    gen_prod_.assign(gen_elem_.size(), {});
    for (std::size_t g = 0; g < gen_elem_.size(); ++g) {
      const RingMatrix& gm = elems_[gen_elem_[g]];
      gen_prod_[g].reserve(n);
      for (std::size_t i = 0; i < n; ++i)
        gen_prod_[g].push_back(index_.at(key(rm_mul(ring_, gm, elems_[i]))));
    }
  }
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    inverse_[i] = index_.at(key(rm_inverse(ring_, elems_[i])));
  if (n <= table_cap && n > 0) {
    mult_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        mult_[i * n + j] = index_.at(key(rm_mul(ring_, elems_[i], elems_[j])));
  }
}

int FinGroup::product(int i, int j) const {
  if (!mult_.empty()) return mult_[static_cast<std::size_t>(i) * elems_.size() + j];
  return index_.at(key(rm_mul(ring_, elems_[i], elems_[j])));
}

std::vector<int> FinGroup::word(int i) const {
  std::vector<int> w;
  for (int t = i; t != 0; t = parent_[t]) w.push_back(via_gen_[t]);
  return w;
}

void FinGroup::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(Err::ConfigError, "cannot open file for writing: " + path);
  os.write(kMagic, 8);
  put_u64(os, static_cast<std::uint64_t>(ring_.p()));
  put_u64(os, static_cast<std::uint64_t>(ring_.k()));
  put_u64(os, static_cast<std::uint64_t>(dim_));
  put_u64(os, elems_.size());
  put_u64(os, gen_elem_.size());
  for (const auto& m : elems_)
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) put_u32(os, static_cast<std::uint32_t>(m(r, c)));
  for (int g : gen_elem_) put_u32(os, static_cast<std::uint32_t>(g));
  for (int p : parent_) put_u32(os, static_cast<std::uint32_t>(p));
  for (int v : via_gen_) put_u32(os, static_cast<std::uint32_t>(v));
  if (!os) fail(Err::ConfigError, "write failed: " + path);
}

FinGroup FinGroup::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(Err::ConfigError, "cannot open file for reading: " + path);
  char magic[8];
  is.read(magic, 8);
  if (!is || !std::equal(magic, magic + 8, kMagic))
    fail(Err::ConfigError, "not a saved group file: " + path);
  auto p = static_cast<std::int64_t>(get_u64(is));
  auto k = static_cast<int>(get_u64(is));
  auto dim = static_cast<int>(get_u64(is));
  auto n = static_cast<std::size_t>(get_u64(is));
  auto ngens = static_cast<std::size_t>(get_u64(is));
  if (!is || dim < 0 || n == 0) fail(Err::ConfigError, "truncated group file: " + path);
  FinGroup G(Ring::make_local_ring(p, k), dim);
  G.elems_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RingMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(r, c) = static_cast<Elem>(get_u32(is));
    G.index_.emplace(G.key(m), static_cast<int>(i));
    G.elems_.push_back(std::move(m));
  }
  G.gen_elem_.resize(ngens);
  for (std::size_t g = 0; g < ngens; ++g)
    G.gen_elem_[g] = static_cast<int>(get_u32(is));
  G.parent_.resize(n);
  for (std::size_t i = 0; i < n; ++i) G.parent_[i] = static_cast<int>(get_u32(is));
  G.via_gen_.resize(n);
  for (std::size_t i = 0; i < n; ++i) G.via_gen_[i] = static_cast<int>(get_u32(is));
  if (!is) fail(Err::ConfigError, "truncated group file: " + path);
  if (n == 0 || !(G.elems_[0] == RingMatrix::identity(dim)))
    fail(Err::ConfigError, "corrupt group file: identity missing");
  G.finish(kTableCap);
  return G;
}

}  // namespace spwb

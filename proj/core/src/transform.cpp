#include "mbspec/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace mbspec {

namespace {

// FFTW planning is not thread-safe; executing distinct or identical plans on
// caller-provided arrays is. Plans are cached per (dim, N, sign) and created
// with FFTW_ESTIMATE so the chosen algorithm never varies between runs.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache c;
    return c;
  }

  void execute(const Grid& g, int sign, Complex* in, Complex* out) {
    fftw_plan p = get(g, sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
  }

 private:
  fftw_plan get(const Grid& g, int sign) {
    std::scoped_lock lock(mu_);
    Key key{g.dim(), g.n(), sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    std::vector<Complex> buf(g.size());
    auto* b = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan p;
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    if (g.dim() == 2)
      p = fftw_plan_dft_2d(g.n(), g.n(), b, b, sign, flags);
    else
      p = fftw_plan_dft_3d(g.n(), g.n(), g.n(), b, b, sign, flags);
    plans_.emplace(key, p);
    return p;
  }

  using Key = std::tuple<int, int, int>;
  std::mutex mu_;
  std::map<Key, fftw_plan> plans_;
};

}  // namespace

SpectralScalar forward_transform(const PhysicalField& f) {
  const Grid& g = f.grid;
  if (f.values.size() != g.size())
    throw UsageError("sample count does not match the grid");
  for (double v : f.values)
    if (!std::isfinite(v)) throw DataError("non-finite sample rejected");

  std::vector<Complex> buf(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) buf[i] = Complex{f.values[i], 0.0};
  PlanCache::instance().execute(g, FFTW_FORWARD, buf.data(), buf.data());

  const double scale = 1.0 / static_cast<double>(g.size());
  for (Complex& z : buf) z *= scale;

  SpectralScalar out(g, std::move(buf));
  out.hermitize();
  return out;
}

PhysicalField inverse_transform(const SpectralScalar& f) {
  const Grid& g = f.grid();
  std::vector<Complex> buf(f.coeffs().begin(), f.coeffs().end());
  PlanCache::instance().execute(g, FFTW_BACKWARD, buf.data(), buf.data());

  PhysicalField out(g);
  for (std::size_t i = 0; i < g.size(); ++i) out.values[i] = buf[i].real();
  return out;
}

std::vector<PhysicalField> inverse_transform(const SpectralVector& v) {
  std::vector<PhysicalField> out;
  out.reserve(v.dim());
  for (int a = 0; a < v.dim(); ++a) out.push_back(inverse_transform(v[a]));
  return out;
}

}  // namespace mbspec

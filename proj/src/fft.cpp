#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace dsw::detail {

namespace {

// fftw_execute_dft is thread-safe; plan creation is not. Plans are created
// once per size with FFTW_UNALIGNED so they can run on any caller buffer.
class PlanCache {
 public:
  fftw_plan get(std::size_t n) {
    std::scoped_lock lock(mu_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> a(n), b(n);
    fftw_plan p = fftw_plan_dft_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(a.data()),
        reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw plan creation failed");
    plans_.emplace(n, p);
    return p;
  }

  ~PlanCache() {
    for (auto& [n, p] : plans_) fftw_destroy_plan(p);
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::size_t, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void fft_forward(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out) {
  if (in.empty() || out.size() != in.size())
    throw std::invalid_argument("fft_forward: bad buffer sizes");
  fftw_plan p = cache().get(in.size());
  fftw_execute_dft(
      p,
      reinterpret_cast<fftw_complex*>(
          const_cast<std::complex<double>*>(in.data())),
      reinterpret_cast<fftw_complex*>(out.data()));
}

std::vector<std::complex<double>> fft_real_forward(std::span<const double> x) {
  std::vector<std::complex<double>> in(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) in[i] = {x[i], 0.0};
  std::vector<std::complex<double>> out(x.size());
  fft_forward(in, out);
  return out;
}

std::vector<double> autocovariances(std::span<const double> x,
                                    std::size_t max_lag) {
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("autocovariances: series too short");
  if (max_lag >= n)
    throw std::invalid_argument("autocovariances: max_lag >= n");
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);

  std::size_t m = 1;
  while (m < 2 * n) m <<= 1;
  std::vector<std::complex<double>> padded(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) padded[i] = {x[i] - mean, 0.0};
  std::vector<std::complex<double>> spec(m);
  fft_forward(padded, spec);
  for (auto& z : spec) z = {std::norm(z), 0.0};
  std::vector<std::complex<double>> acf(m);
  fft_forward(spec, acf);  // forward of |X|^2 = m * circular autocovariance

  std::vector<double> out(max_lag + 1);
  for (std::size_t k = 0; k <= max_lag; ++k)
    out[k] = acf[k].real() / static_cast<double>(m) / static_cast<double>(n);
  return out;
}

}  // namespace dsw::detail

#include "fresnelpr/fresnel.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <span>
#include <string>

#include "fresnelpr/errors.hpp"

namespace fresnelpr {
namespace {

constexpr double kPi = std::numbers::pi;

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

// exp(2 pi i k / n) with k reduced modulo n first, so large index products
// keep full precision.
Complex root_of_unity(long long k, long long n) {
  long long r = k % n;
  if (r < 0) r += n;
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
}

// Plain product; std::complex's operator* adds NaN/Inf recovery that the
// divergence check downstream makes unnecessary.
void multiply(std::span<Complex> data, const std::vector<Complex>& factors) {
  for (std::size_t k = 0; k < data.size(); ++k) {
    const double ar = data[k].real(), ai = data[k].imag();
    const double br = factors[k].real(), bi = factors[k].imag();
    data[k] = Complex{ar * br - ai * bi, ar * bi + ai * br};
  }
}

}  // namespace

struct FresnelKernel::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  explicit Plans(int n) {
    // Planned in-place; fftw_execute_dft() must be called in-place as well.
    std::vector<Complex> a(static_cast<std::size_t>(n) * n);
    // ESTIMATE never times candidate algorithms, so the chosen plan (and every
    // result bit) is identical from run to run.
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_dft_2d(n, n, as_fftw(a.data()), as_fftw(a.data()), FFTW_FORWARD, flags);
    backward = fftw_plan_dft_2d(n, n, as_fftw(a.data()), as_fftw(a.data()), FFTW_BACKWARD, flags);
    if (forward == nullptr || backward == nullptr) {
      destroy();
      throw std::runtime_error("FFTW failed to create a plan for side " + std::to_string(n));
    }
  }
  ~Plans() {
    std::lock_guard lock(planner_mutex());
    destroy();
  }
  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;

 private:
  void destroy() {
    if (forward != nullptr) fftw_destroy_plan(forward);
    if (backward != nullptr) fftw_destroy_plan(backward);
    forward = backward = nullptr;
  }
};

std::size_t required_samples(double wavelength, double distance, double pitch, std::size_t image_side) {
  if (!(wavelength > 0.0) || !(distance > 0.0) || !(pitch > 0.0)) {
    throw ConfigError("required_samples: wavelength, distance and pitch must be positive");
  }
  if (image_side < 1) throw ConfigError("required_samples: image side must be at least 1");
  const double ideal = wavelength * distance / (pitch * pitch);
  const double even = 2.0 * std::round(ideal / 2.0);
  if (even < static_cast<double>(image_side)) {
    throw ConfigError("image exceeds Fresnel computational domain: lambda*z/dx^2 = " + std::to_string(ideal) +
                      " < image side " + std::to_string(image_side));
  }
  return static_cast<std::size_t>(even);
}

double sampling_distance(double width_in, double width_out, double samples, double wavelength) {
  if (!(width_in > 0.0) || !(width_out > 0.0) || !(samples > 0.0) || !(wavelength > 0.0)) {
    throw ConfigError("sampling_distance: all arguments must be positive");
  }
  return width_in * width_out / (samples * wavelength);
}

OpticalSetup make_setup(double wavelength, double distance, double pitch, std::size_t image_side) {
  const std::size_t n = required_samples(wavelength, distance, pitch, image_side);
  return OpticalSetup::create(wavelength, distance, pitch, image_side, n);
}

FresnelKernel::FresnelKernel(const OpticalSetup& setup) : setup_(setup) {
  const std::size_t n = setup.domain_side();
  const auto nn = static_cast<long long>(n);
  const auto c = static_cast<long long>(n / 2);
  const double lz = setup.wavelength() * setup.distance();

  // 1-D factors; the 2-D arrays are outer products.
  std::vector<double> r2(n);
  std::vector<Complex> modulation(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = coordinate(i, setup);
    r2[i] = x * x;
    modulation[i] = root_of_unity(c * static_cast<long long>(i), nn);
  }
  // Per-axis constant of the centered DFT, exp(-2 pi i c^2 / N), squared for 2-D.
  const Complex centering = root_of_unity(-2 * c * c, nn);

  const double axial = std::remainder(2.0 * kPi * setup.distance() / setup.wavelength(), 2.0 * kPi);
  prefactor_ = std::polar(1.0, axial) / Complex{0.0, static_cast<double>(n)};
  // Reciprocal prefactor times the 1/N^2 of the unnormalized inverse DFT.
  const Complex inverse_scale = Complex{0.0, 1.0} * std::polar(1.0, -axial) / static_cast<double>(n);

  input_chirp_.resize(n * n);
  output_chirp_.resize(n * n);
  forward_pre_.resize(n * n);
  forward_post_.resize(n * n);
  inverse_pre_.resize(n * n);
  inverse_post_.resize(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      const std::size_t k = row * n + col;
      const Complex chirp = std::polar(1.0, kPi * (r2[row] + r2[col]) / lz);
      const Complex mod = modulation[row] * modulation[col];
      input_chirp_[k] = chirp;
      output_chirp_[k] = chirp;
      forward_pre_[k] = chirp * mod;
      forward_post_[k] = prefactor_ * centering * chirp * mod;
      inverse_pre_[k] = std::conj(centering * chirp * mod);
      inverse_post_[k] = inverse_scale * std::conj(chirp * mod);
    }
  }
  plans_ = std::make_shared<const Plans>(static_cast<int>(n));
}

void FresnelKernel::check_side(const FieldGrid& field, const char* what) const {
  if (field.side() != side()) {
    throw ConfigError(std::string(what) + ": field side " + std::to_string(field.side()) +
                      " != kernel side " + std::to_string(side()));
  }
}

void FresnelKernel::forward_in_place(FieldGrid& field) const {
  check_side(field, "frt");
  auto s = field.samples();
  multiply(s, forward_pre_);
  fftw_execute_dft(plans_->forward, as_fftw(s.data()), as_fftw(s.data()));
  multiply(s, forward_post_);
}

void FresnelKernel::inverse_in_place(FieldGrid& field) const {
  check_side(field, "ifrt");
  auto s = field.samples();
  multiply(s, inverse_pre_);
  fftw_execute_dft(plans_->backward, as_fftw(s.data()), as_fftw(s.data()));
  multiply(s, inverse_post_);
}

FieldGrid FresnelKernel::forward(const FieldGrid& u1) const {
  FieldGrid out = u1;
  forward_in_place(out);
  return out;
}

FieldGrid FresnelKernel::inverse(const FieldGrid& u2) const {
  FieldGrid out = u2;
  inverse_in_place(out);
  return out;
}

FresnelKernel build_kernel(const OpticalSetup& setup) { return FresnelKernel(setup); }

FieldGrid frt(const FieldGrid& u1, const FresnelKernel& kernel) { return kernel.forward(u1); }

FieldGrid ifrt(const FieldGrid& u2, const FresnelKernel& kernel) { return kernel.inverse(u2); }

}  // namespace fresnelpr

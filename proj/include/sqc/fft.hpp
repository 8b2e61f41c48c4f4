#ifndef SQC_FFT_HPP
#define SQC_FFT_HPP

#include <complex>
#include <vector>

namespace sqc::fft {

// Thin wrappers around FFTW (plan creation serialized behind a mutex; plan
// execution is thread-safe). All transforms are unnormalized, matching the
// FFTW convention.

// Inverse transform of a half-complex spectrum (size n/2+1) to n real samples.
std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum,
                          std::size_t n);

// Forward transform of n real samples to a half-complex spectrum (size n/2+1).
std::vector<std::complex<double>> rfft(const std::vector<double>& x);

}  // namespace sqc::fft

#endif

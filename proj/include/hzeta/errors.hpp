// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#ifndef HZETA_ERRORS_HPP
#define HZETA_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace hzeta {

class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation requested at (or too near) a pole of the function.
class pole_error : public domain_error {
public:
    pole_error(const std::string& what, std::complex<double> location, int order,
               double residue = std::numeric_limits<double>::quiet_NaN())
        : domain_error(what), location_(location), order_(order), residue_(residue) {}

    std::complex<double> location() const noexcept { return location_; }
    int order() const noexcept { return order_; }
    double residue() const noexcept { return residue_; }

private:
    std::complex<double> location_;
    int order_;
    double residue_;
};

/// Requested accuracy not reached; carries the best value obtained.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, std::complex<double> best, double estimate)
        : std::runtime_error(what), best_(best), estimate_(estimate) {}

    std::complex<double> best_value() const noexcept { return best_; }
    double error_estimate() const noexcept { return estimate_; }

private:
    std::complex<double> best_;
    double estimate_;
};

/// Value with its achieved-error estimate.
template <class T>
struct Estimated {
    T value{};
    double error = 0.0;
};

} // namespace hzeta

#endif // HZETA_ERRORS_HPP

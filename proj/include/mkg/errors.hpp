#pragma once

#include <stdexcept>
#include <string>

namespace mkg {

/// Raised by inv_laplacian when the input has a nonzero spatial mean.
class MeanNotZero : public std::domain_error {
public:
    explicit MeanNotZero(double mean_abs)
        : std::domain_error("inverse Laplacian of a field with nonzero mean (|mean| = " +
                            std::to_string(mean_abs) + ")"),
          mean_abs_(mean_abs) {}
    double mean_abs() const noexcept { return mean_abs_; }

private:
    double mean_abs_;
};

class SolverDiverged : public std::runtime_error {
public:
    SolverDiverged(int iterations, double residual)
        : std::runtime_error("elliptic solve did not converge after " + std::to_string(iterations) +
                             " iterations (relative residual " + std::to_string(residual) + ")"),
          iterations_(iterations), residual_(residual) {}
    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

/// Non-finite values appeared in a Runge-Kutta stage.
class BlowupDetected : public std::runtime_error {
public:
    BlowupDetected(int stage, double time)
        : std::runtime_error("non-finite values in RK4 stage " + std::to_string(stage) +
                             " of the step starting at t = " + std::to_string(time)),
          stage_(stage), time_(time) {}
    int stage() const noexcept { return stage_; }
    double time() const noexcept { return time_; }

private:
    int stage_;
    double time_;
};

class GaugeViolation : public std::domain_error {
public:
    explicit GaugeViolation(double divergence)
        : std::domain_error("state violates the Coulomb gauge (divergence " +
                            std::to_string(divergence) + ")"),
          divergence_(divergence) {}
    double divergence() const noexcept { return divergence_; }

private:
    double divergence_;
};

}  // namespace mkg

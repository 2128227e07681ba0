#pragma once

#include <stdexcept>
#include <string>

namespace penmax {

/// Base class for all library errors. `kind()` is a stable machine-readable
/// tag used by the CLI when emitting error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct NonFiniteInput : Error {
    explicit NonFiniteInput(const std::string& what = "non-finite value in input")
        : Error("NonFiniteInput", what) {}
};

struct ZeroVarianceColumn : Error {
    explicit ZeroVarianceColumn(int col)
        : Error("ZeroVarianceColumn",
                "instrument column " + std::to_string(col) + " has zero sample variance"),
          column(col) {}
    int column;
};

struct NonFiniteResidual : Error {
    explicit NonFiniteResidual(int r)
        : Error("NonFiniteResidual", "residual at row " + std::to_string(r) + " is not finite"),
          row(r) {}
    int row;
};

struct DegenerateVariance : Error {
    explicit DegenerateVariance(int comp = 0)
        : Error("DegenerateVariance",
                "variance estimate s_n^2 is degenerate (component " + std::to_string(comp) + ")"),
          component(comp) {}
    int component;
};

struct GridTooLarge : Error {
    explicit GridTooLarge(const std::string& what) : Error("GridTooLarge", what) {}
};

struct NonFiniteObjective : Error {
    explicit NonFiniteObjective(const std::string& what = "objective returned a non-finite value")
        : Error("NonFiniteObjective", what) {}
};

struct PathMonotonicityFailure : Error {
    PathMonotonicityFailure(double lam, double t_prev, double t_now)
        : Error("PathMonotonicityFailure",
                "solution path not monotone at lambda=" + std::to_string(lam) +
                    ": t=" + std::to_string(t_now) + " < previous t=" + std::to_string(t_prev) +
                    " after all restarts"),
          lambda(lam) {}
    double lambda;
};

struct PluginFailure : Error {
    explicit PluginFailure(const std::string& what) : Error("PluginFailure", what) {}
};

struct MissingColumn : Error {
    explicit MissingColumn(const std::string& n)
        : Error("MissingColumn", "column '" + n + "' not found in data header"), name(n) {}
    std::string name;
};

struct NonNumericCell : Error {
    NonNumericCell(int r, const std::string& col)
        : Error("NonNumericCell",
                "non-numeric cell at data row " + std::to_string(r) + ", column '" + col + "'"),
          row(r), column(col) {}
    int row;
    std::string column;
};

struct EmptyAfterFiltering : Error {
    explicit EmptyAfterFiltering(const std::string& what = "no usable rows after filtering")
        : Error("EmptyAfterFiltering", what) {}
};

struct BadGrid : Error {
    explicit BadGrid(const std::string& what) : Error("BadGrid", what) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

}  // namespace penmax

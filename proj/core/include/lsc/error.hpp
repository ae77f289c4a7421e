#ifndef LSC_ERROR_HPP
#define LSC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lsc {

enum class errc {
    invalid_rank,
    invalid_state,
    invalid_input,
    insufficient_vectors,
    unsupported_level,
    degenerate_input,
    label_range,
    invalid_config,
    inconsistent_provenance,
    invalid_k,
    invalid_architecture,
    shape_mismatch,
    divergence,
    missing_class,
    empty_input,
    parse,
    center_drift,
    capacity,
    io,
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

const char* errc_name(errc kind);

}  // namespace lsc

#endif  // LSC_ERROR_HPP

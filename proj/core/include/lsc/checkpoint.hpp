#ifndef LSC_CHECKPOINT_HPP
#define LSC_CHECKPOINT_HPP

#include <string>

#include "lsc/trainer.hpp"

namespace lsc {

/// Versioned binary training checkpoint: layer dims, parameters,
/// optimizer moments, step counter, metric history and the RNG stream.
/// Loading restores a state that continues training bit-identically to
/// the uninterrupted run.
void save_checkpoint(const TrainState& state, const std::string& path);
TrainState load_checkpoint(const std::string& path);

}  // namespace lsc

#endif  // LSC_CHECKPOINT_HPP

#pragma once

#include <string>
#include <vector>

#include "eigenflow/dynamics.hpp"
#include "eigenflow/homotopy.hpp"
#include "eigenflow/spectra.hpp"
#include "eigenflow/stats.hpp"

namespace eigenflow::io {

// All CSV floats use %.15g; all writers are deterministic, so identical
// inputs give identical bytes.

std::string eigens_csv(const spectra::EigenSet& es);

std::string table1_csv(const std::vector<stats::UnitCircleRow>& rows);

// Long format, one row per nonzero bin (empty bins are omitted from the
// presentation, matching the table caption; the structure retains them).
std::string bins_csv(const std::vector<stats::BinHistogram>& hists);

std::string classify_csv(const std::vector<dynamics::ClassTableRow>& rows);

std::string fits_json(const stats::LogisticFit& logistic, const stats::ExpDecayFit& exp_decay);

// Array of {k, numerator, denominator}; numbers as decimal strings because
// numerators exceed 64-bit range.
std::string jungreis_json();

// Homotopy parameter sets; complex values serialize as [re, im] pairs.
std::string homotopy_params_json(const homotopy::HomotopySpec& spec,
                                 const homotopy::TuningParams& tuning);

// Snapshot rows: the spectra point schema with the deformed reciprocal in
// the re_recip/im_recip columns, plus t, kind, and a trailing note column
// ("extrapolated" for series evaluation inside the unit disk).
std::string snapshots_csv(const spectra::EigenSet& es, const homotopy::HomotopySpec& spec,
                          const std::vector<double>& ts);

std::string density_csv(const std::vector<double>& angles, const std::vector<double>& distances);

void write_text_file(const std::string& path, const std::string& content);

std::string format_double(double v);   // %.15g

}  // namespace eigenflow::io

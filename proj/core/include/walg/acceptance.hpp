#pragma once

#include <string>
#include <vector>

#include "walg/report.hpp"
#include "walg/vertex.hpp"

namespace walg {

constexpr int kCriteria = 9;

const char* criterion_title(int id);

// The verification suite for one acceptance criterion (1..9) as a report
// "acceptance.c<id>".  Fixtures larger than gl_{max_n} are skipped and noted;
// max_n >= 3 covers every required fixture.
Report acceptance_criterion(int id, int max_n);

// All criteria, in order.
std::vector<Report> verify_all(int max_n);

// Free-field tables of rank 3 used for the engine oracle comparison.
TablePtr oracle_table_betagamma();
TablePtr oracle_table_heisenberg();

}  // namespace walg

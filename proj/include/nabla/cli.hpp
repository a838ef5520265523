#pragma once

// Command line front end shared by tools/main.cpp and the tests.
//
// Exit status: 0 when every assertion passes, 1 on an assertion failure,
// 2 on a configuration error.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "nabla/symfunc.hpp"

namespace nabla {

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// JSON encodings used in the reports. Integers are decimal strings.
nlohmann::json to_json(const UPoly& p);
nlohmann::json to_json(const QRat& r);
// [{t_deg, q_num, q_den}] when the denominator is free of t, otherwise
// [{qt_num, qt_den}] with t-coefficient lists.
nlohmann::json to_json(const QtScalar& c);
// [{x_exp, y_exp, t_deg, q_num, q_den}] in monomial then t order.
nlohmann::json to_json(const SeriesTable& s);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const SymFunc& f);

}  // namespace nabla

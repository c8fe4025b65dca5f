#ifndef SEMIORTHO_SEMIORTHO_HPP
#define SEMIORTHO_SEMIORTHO_HPP

// Umbrella header. JSON support lives in json_io.hpp and additionally needs
// nlohmann/json.

#include "bilinear_form.hpp"
#include "classification.hpp"
#include "exact_linalg.hpp"
#include "k0_pn.hpp"
#include "markov.hpp"
#include "matrix.hpp"
#include "mutations.hpp"
#include "number.hpp"
#include "orbit.hpp"
#include "polynomial.hpp"
#include "random_forms.hpp"
#include "series.hpp"
#include "verify.hpp"

#endif  // SEMIORTHO_SEMIORTHO_HPP

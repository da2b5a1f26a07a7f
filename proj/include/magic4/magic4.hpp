#ifndef MAGIC4_MAGIC4_HPP
#define MAGIC4_MAGIC4_HPP

#include "magic4/correspond.hpp"
#include "magic4/enumerate.hpp"
#include "magic4/forms.hpp"
#include "magic4/io.hpp"
#include "magic4/square.hpp"
#include "magic4/symmetry.hpp"
#include "magic4/verify.hpp"

#endif  // MAGIC4_MAGIC4_HPP

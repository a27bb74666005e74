#pragma once

// Convenience include for the whole library.

#include "commands.hpp"
#include "decomposition.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "inverses.hpp"
#include "linearized.hpp"
#include "oracle.hpp"
#include "perms.hpp"
#include "specfile.hpp"

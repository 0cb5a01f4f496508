#pragma once

#include "error.hpp"
#include "matrix.hpp"
#include "digraph.hpp"
#include "spectrum.hpp"
#include "signing.hpp"
#include "orientations.hpp"
#include "oracle.hpp"
#include "io.hpp"
#include "verify.hpp"

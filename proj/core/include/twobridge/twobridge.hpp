#pragma once

#include "twobridge/contfrac.hpp"
#include "twobridge/diagram.hpp"
#include "twobridge/error.hpp"
#include "twobridge/goeritz.hpp"
#include "twobridge/matrix.hpp"
#include "twobridge/numeric.hpp"
#include "twobridge/signature.hpp"

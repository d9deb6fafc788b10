#pragma once

#include "lazydigest/algebra.hpp"
#include "lazydigest/analysis.hpp"
#include "lazydigest/applications.hpp"
#include "lazydigest/constructions.hpp"
#include "lazydigest/descriptor.hpp"
#include "lazydigest/digest.hpp"
#include "lazydigest/errors.hpp"
#include "lazydigest/extended_digest.hpp"
#include "lazydigest/hash.hpp"
#include "lazydigest/oracle.hpp"

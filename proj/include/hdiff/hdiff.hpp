#pragma once

// Umbrella header for the whole library.

#include "hdiff/abc.hpp"
#include "hdiff/certificate.hpp"
#include "hdiff/classify.hpp"
#include "hdiff/config.hpp"
#include "hdiff/errors.hpp"
#include "hdiff/families.hpp"
#include "hdiff/io/cache.hpp"
#include "hdiff/io/config_file.hpp"
#include "hdiff/io/document.hpp"
#include "hdiff/io/table.hpp"
#include "hdiff/modular.hpp"
#include "hdiff/order_chain.hpp"
#include "hdiff/rectangle.hpp"
#include "hdiff/representations.hpp"
#include "hdiff/smooth.hpp"
#include "hdiff/verifier.hpp"

import logging
import os
from typing import Dict, Optional

from google.auth.transport.requests import Request
from google.oauth2 import service_account

from src.config.config import config
from src.exceptions import BackendError
from src.models.constants import ACCEPT_JSON, CONTENT_TYPE_JSON

logger = logging.getLogger(__name__)


class InferenceAuth:
    """
    Bearer credentials for the inference server.

    A static token (SALESBOT_INFERENCE_TOKEN) wins over a service account
    key; with neither configured, requests go out unauthenticated.
    """

    def __init__(self, static_token: Optional[str] = None, service_account_key_path: Optional[str] = None):
        self.static_token = config.SALESBOT_INFERENCE_TOKEN if static_token is None else static_token
        self.service_account_key_path = (
            config.SALESBOT_SERVICE_ACCOUNT_KEY_PATH if service_account_key_path is None else service_account_key_path
        )
        self.cached_token = None
        self.credentials = None

    @property
    def enabled(self) -> bool:
        return bool(self.static_token or self.service_account_key_path)

    def get_access_token(self) -> str:
        if self.static_token:
            return self.static_token
        try:
            if not self.credentials:
                if not os.path.exists(self.service_account_key_path):
                    raise FileNotFoundError(f"Service account file not found: {self.service_account_key_path}")

                self.credentials = service_account.Credentials.from_service_account_file(
                    self.service_account_key_path,
                    scopes=['https://www.googleapis.com/auth/cloud-platform']
                )

            if not self.cached_token or self.credentials.expired:
                self.credentials.refresh(Request())
                self.cached_token = self.credentials.token
                logger.debug("Refreshed inference access token")

            return self.cached_token

        except Exception as e:
            raise BackendError(f"Authentication failed: {str(e)}")

    def get_headers(self) -> Dict[str, str]:
        headers = {
            "Content-Type": CONTENT_TYPE_JSON,
            "Accept": ACCEPT_JSON
        }

        if self.enabled:
            headers["Authorization"] = f"Bearer {self.get_access_token()}"

        return headers

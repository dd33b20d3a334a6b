import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    SALESBOT_INFERENCE_URL = os.getenv('SALESBOT_INFERENCE_URL', 'http://localhost:8080')
    SALESBOT_INFERENCE_TIMEOUT = int(os.getenv('SALESBOT_INFERENCE_TIMEOUT', 30))
    SALESBOT_INFERENCE_RETRIES = int(os.getenv('SALESBOT_INFERENCE_RETRIES', 3))
    SALESBOT_INFERENCE_BACKOFF = float(os.getenv('SALESBOT_INFERENCE_BACKOFF', 0.5))
    SALESBOT_SERVICE_ACCOUNT_KEY_PATH = os.getenv('SALESBOT_SERVICE_ACCOUNT_KEY_PATH', '')
    SALESBOT_INFERENCE_TOKEN = os.getenv('SALESBOT_INFERENCE_TOKEN', '')
    SALESBOT_WORKERS = int(os.getenv('SALESBOT_WORKERS', 4))
    ANTHROPIC_API_KEY = os.getenv('ANTHROPIC_API_KEY', '')
    ANTHROPIC_API_TIMEOUT = int(os.getenv('ANTHROPIC_API_TIMEOUT', 30))
    ANTHROPIC_MODEL_NAME = os.getenv('ANTHROPIC_MODEL_NAME', 'claude-sonnet-4-20250514')
    DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'

    def validate(self, needs_remote: bool = False, needs_anthropic: bool = False):
        """Validate required configuration for the backends a run will build."""
        if self.SALESBOT_INFERENCE_RETRIES < 0:
            raise ValueError("SALESBOT_INFERENCE_RETRIES must be >= 0")
        if self.SALESBOT_WORKERS < 1:
            raise ValueError("SALESBOT_WORKERS must be >= 1")
        if needs_remote:
            if not self.SALESBOT_INFERENCE_TIMEOUT:
                raise ValueError("SALESBOT_INFERENCE_TIMEOUT is required")
            if self.SALESBOT_SERVICE_ACCOUNT_KEY_PATH and not os.path.exists(self.SALESBOT_SERVICE_ACCOUNT_KEY_PATH):
                raise ValueError(f"Service account file not found: {self.SALESBOT_SERVICE_ACCOUNT_KEY_PATH}")
        if needs_anthropic:
            if not self.ANTHROPIC_API_KEY:
                raise ValueError("ANTHROPIC_API_KEY is required")
            if not self.ANTHROPIC_MODEL_NAME:
                raise ValueError("ANTHROPIC_MODEL_NAME is required")

config = Config()
